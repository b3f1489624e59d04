#include "doctest.h"
#include "fockcanon/errors.hpp"
#include "fockcanon/fock_space.hpp"
#include "fockcanon/verification.hpp"

using namespace fockcanon;

namespace {

Multipartition mp(const char* s) { return parse_multipartition(s); }
const LaurentPoly q = LaurentPoly::q_power(1);

FockVector basis(const FockContext& ctx, const char* s) {
  FockVector v(ctx);
  v.add_term(mp(s), LaurentPoly(1));
  return v;
}

FockVector f_word(const std::vector<Residue>& word, FockVector v) {
  for (Residue i : word) v = f_action(i, v);
  return v;
}

// Every basis vector of each size up to max_size.
std::vector<FockVector> sample_vectors(const FockContext& ctx, int max_size) {
  std::vector<FockVector> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& la : multipartitions_of(n, ctx.level())) out.push_back(basis(ctx, to_string(la).c_str()));
  return out;
}

}  // namespace

TEST_SUITE("fock_space") {
  TEST_CASE("F_1 s_(1) at e = 2") {
    const FockContext ctx(Characteristic(2), parse_charge("0"));
    FockVector expected(ctx);
    expected.add_term(mp("2"), q);
    expected.add_term(mp("1,1"), LaurentPoly(1));
    CHECK(f_action(1, basis(ctx, "1")) == expected);
    CHECK(f_action(0, basis(ctx, "-")) == basis(ctx, "1"));
    CHECK(f_action(0, basis(ctx, "1")).is_zero());
  }

  TEST_CASE("E action exponents") {
    const FockContext ctx(Characteristic(2), parse_charge("0"));
    // The only removable 1-node of (2) has nothing before it.
    CHECK(e_action(1, basis(ctx, "2")) == basis(ctx, "1"));
    // (2,1) of (1,1) sits after the addable 1-node (1,2).
    CHECK(e_action(1, basis(ctx, "1,1")) == LaurentPoly::q_power(-1) * basis(ctx, "1"));
    CHECK(e_action(0, basis(ctx, "-")).is_zero());
  }

  TEST_CASE("F_0^(2) of the level-two vacuum") {
    // F_0 s = q s_{1|-} + s_{-|1}; a second F_0 gives (q + q^-1) s_{1|1}.
    const FockContext ctx(Characteristic(2), parse_charge("0,0"));
    FockVector once(ctx);
    once.add_term(mp("1|-"), q);
    once.add_term(mp("-|1"), LaurentPoly(1));
    CHECK(f_action(0, vacuum(ctx)) == once);
    CHECK(f_action(0, once) == quantum_int(2) * basis(ctx, "1|1"));
    CHECK(divided_power_f(0, 2, vacuum(ctx)) == basis(ctx, "1|1"));
    CHECK(divided_power_f(0, 3, vacuum(ctx)).is_zero());
  }

  TEST_CASE("divided powers are exact and agree with repeated action") {
    for (const char* k : {"0", "0,1", "0,0"})
      for (int e : {2, 3}) {
        const FockContext ctx(Characteristic(e), parse_charge(k));
        for (const auto& v : sample_vectors(ctx, 3))
          for (Residue i = 0; i < e; ++i)
            for (int m = 1; m <= 3; ++m) {
              FockVector power = v;
              for (int t = 0; t < m; ++t) power = f_action(i, power);
              CHECK(quantum_factorial(m) * divided_power_f(i, m, v) == power);
            }
      }
  }

  TEST_CASE("quantum Serre relations") {
    for (const char* k : {"0", "0,1", "1,0,2"})
      for (int e : {3, 4}) {
        const FockContext ctx(Characteristic(e), parse_charge(k));
        for (const auto& v : sample_vectors(ctx, 2))
          for (Residue i = 0; i < e; ++i) {
            const Residue j = (i + 1) % e;
            FockVector lhs = f_word({j, i, i}, v);
            lhs -= quantum_int(2) * f_word({i, j, i}, v);
            lhs += f_word({i, i, j}, v);
            CHECK(lhs.is_zero());
            if (e == 4) CHECK(f_word({i, (i + 2) % e}, v) == f_word({(i + 2) % e, i}, v));
          }
      }
    // a_01 = -2 at e = 2.
    for (const char* k : {"0", "0,1"}) {
      const FockContext ctx(Characteristic(2), parse_charge(k));
      for (const auto& v : sample_vectors(ctx, 2))
        for (Residue i = 0; i < 2; ++i) {
          const Residue j = 1 - i;
          FockVector lhs = f_word({j, i, i, i}, v);
          lhs -= quantum_int(3) * f_word({i, j, i, i}, v);
          lhs += quantum_int(3) * f_word({i, i, j, i}, v);
          lhs -= f_word({i, i, i, j}, v);
          CHECK(lhs.is_zero());
        }
    }
  }

  TEST_CASE("commutator identity") {
    for (const char* e : {"2", "3", "4", "inf"})
      for (const char* k : {"0", "0,1", "0,0", "2,0,1"}) {
        const FockContext ctx(Characteristic::parse(e), parse_charge(k));
        const auto rep = verify_commutators(ctx, 200, 5, 11);
        CHECK_MESSAGE(rep.passed(), "e=", e, " charge=", k);
      }
  }

  TEST_CASE("weight_ci") {
    const FockContext ctx(Characteristic(2), parse_charge("0"));
    CHECK(weight_ci(mp("-"), 0, ctx) == 1);
    CHECK(weight_ci(mp("1"), 0, ctx) == -1);
    CHECK(weight_ci(mp("1"), 1, ctx) == 2);
  }

  TEST_CASE("vector arithmetic and validation") {
    const FockContext ctx(Characteristic(3), parse_charge("0,1"));
    FockVector v(ctx);
    v.add_term(mp("1|-"), q);
    v.add_term(mp("1|-"), -q);
    CHECK(v.is_zero());
    CHECK_FALSE(v.size_grading().has_value());
    v.add_term(mp("-|1"), LaurentPoly(2));
    CHECK(v.size_grading() == 1);
    CHECK_THROWS_AS(v.add_term(mp("1"), LaurentPoly(1)), std::invalid_argument);
    CHECK_THROWS_AS(v.add_term(mp("2|-"), LaurentPoly(1)), std::invalid_argument);
    FockVector w = v;
    w -= v;
    CHECK(w.is_zero());
    CHECK((q * v).coefficient(mp("-|1")) == LaurentPoly(2) * q);
  }
}
