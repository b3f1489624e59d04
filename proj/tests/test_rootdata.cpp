#include "doctest.h"
#include "fockcanon/errors.hpp"
#include "fockcanon/rootdata.hpp"

using namespace fockcanon;

namespace {
Multipartition mp(const char* s) { return parse_multipartition(s); }
}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("cartan matrix") {
    const Characteristic e2(2), e3(3), inf = Characteristic::infinite();
    CHECK(cartan(0, 0, e2) == 2);
    CHECK(cartan(0, 1, e2) == -2);
    CHECK(cartan(0, 1, e3) == -1);
    CHECK(cartan(0, 2, e3) == -1);
    CHECK(cartan(0, 2, Characteristic(4)) == 0);
    CHECK(cartan(3, 4, inf) == -1);
    CHECK(cartan(3, 5, inf) == 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(cartan(i, j, Characteristic(4)) == cartan(j, i, Characteristic(4)));
  }

  TEST_CASE("weights from charges") {
    const auto w = weight_from_charge(Characteristic(3), parse_charge("0,1"));
    CHECK(w[0] == 1);
    CHECK(w[2] == 1);
    CHECK(w.level() == 2);
    CHECK(weight_from_charge(Characteristic(2), parse_charge("0,0"))[0] == 2);
  }

  TEST_CASE("beta and block invariance") {
    const FockContext ctx(Characteristic(2), parse_charge("0"));
    const auto b = beta(mp("2"), ctx);
    CHECK(b[0] == 1);
    CHECK(b[1] == 1);
    CHECK(b.height() == 2);
    CHECK(same_block(mp("2"), mp("1,1"), ctx));
    CHECK_THROWS_AS(same_block(mp("2"), mp("1"), ctx), std::invalid_argument);
  }

  TEST_CASE("defect values") {
    const FockContext e2(Characteristic(2), parse_charge("0"));
    CHECK(defect(mp("2"), e2) == 1);
    CHECK(defect(mp("1"), e2) == 0);
    CHECK(defect(mp("-"), e2) == 0);
    // Level one: defect equals the e-weight of the block.
    const FockContext e3(Characteristic(3), parse_charge("0"));
    CHECK(defect(mp("3"), e3) == 1);
    CHECK(defect(mp("3,3"), e3) == 2);
    CHECK(defect(mp("2,1"), e3) == 1);
    CHECK(defect(mp("3,1"), e3) == 0);
    const FockContext inf(Characteristic::infinite(), parse_charge("0"));
    for (int n = 0; n <= 6; ++n)
      for (const auto& la : multipartitions_of(n, 1)) CHECK(defect(la, inf) == 0);
  }

  TEST_CASE("defect is a non-negative block invariant") {
    for (const char* k : {"0", "0,1", "0,0", "1,0,2"})
      for (int e : {2, 3, 4}) {
        const FockContext ctx(Characteristic(e), parse_charge(k));
        for (int n = 0; n <= 4; ++n)
          for (const auto& la : multipartitions_of(n, ctx.level())) {
            CHECK(defect(la, ctx) >= 0);
            CHECK(defect(la, ctx) == defect(beta(la, ctx), ctx));
          }
      }
  }

  TEST_CASE("pairings") {
    const Characteristic e3(3);
    RootVector a0;
    a0.mult[0] = 1;
    RootVector a1;
    a1.mult[1] = 1;
    CHECK(pairing(a0, a0, e3) == 2);
    CHECK(pairing(a0, a1, e3) == -1);
    const auto w = weight_from_charge(e3, parse_charge("0"));
    CHECK(pairing(w, a0) == 1);
    CHECK(pairing(w, a1) == 0);
  }
}
