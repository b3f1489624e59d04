#include "fockcanon/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "fockcanon/crystal.hpp"
#include "fockcanon/errors.hpp"

namespace fockcanon {

namespace {

std::string entry_label(const Multipartition& la, const LaurentPoly& p) {
  return "d(" + to_string(la) + ") = " + to_string(p);
}

void append(std::string& list, const std::string& item) {
  if (!list.empty()) list += "; ";
  list += item;
}

}  // namespace

Report verify_fayers(const DecompositionMatrix& d) {
  Report rep("degree bound and equality characterization");
  const auto& ctx = d.context();
  for (std::size_t c = 0; c < d.cols().size(); ++c) {
    const Multipartition& mu = d.cols()[c];
    const std::string col = "column " + to_string(mu);
    const int cap = defect(mu, ctx);
    Multipartition target = conjugate(mullineux(mu, ctx));

    std::string over_cap;
    std::string inconsistent;
    std::vector<Multipartition> attaining;
    for (const auto& [rc, p] : d.entries()) {
      if (rc.second != c) continue;
      const Multipartition& la = d.rows()[rc.first];
      const bool a = p.max_deg() == cap;
      const bool b = p == LaurentPoly::q_power(cap);
      const bool t = la == target;
      if (p.max_deg() > cap) append(over_cap, entry_label(la, p));
      if (a != b || b != t) append(inconsistent, entry_label(la, p));
      if (a) attaining.push_back(la);
    }
    rep.add(col + ": deg <= defect " + std::to_string(cap), over_cap.empty(), over_cap);
    rep.add(col + ": deg = defect <=> d = q^defect <=> row = " + to_string(target), inconsistent.empty(),
            inconsistent);
    const bool unique = attaining.size() == 1 && attaining.front() == target;
    std::string found;
    for (const auto& la : attaining) append(found, to_string(la));
    rep.add(col + ": bound attained exactly once", unique, unique ? "" : "attained at {" + found + "}");
  }
  return rep;
}

Report verify_structure(const DecompositionMatrix& d) {
  Report rep("unitriangularity, positivity and block support");
  const auto& ctx = d.context();
  for (std::size_t c = 0; c < d.cols().size(); ++c) {
    const Multipartition& mu = d.cols()[c];
    const std::string col = "column " + to_string(mu);
    const RootVector block = beta(mu, ctx);
    rep.add(col + ": d(mu,mu) = 1", d.entry(mu, mu) == LaurentPoly(1), to_string(d.entry(mu, mu)));
    std::string not_positive;
    std::string not_dominant;
    std::string off_block;
    for (const auto& [rc, p] : d.entries()) {
      if (rc.second != c) continue;
      const Multipartition& la = d.rows()[rc.first];
      if (la != mu && !(p.in_q_z_q() && p.nonnegative())) append(not_positive, entry_label(la, p));
      if (!dominates(la, mu)) append(not_dominant, entry_label(la, p));
      if (beta(la, ctx) != block) append(off_block, entry_label(la, p));
    }
    rep.add(col + ": off-diagonal entries in qN[q]", not_positive.empty(), not_positive);
    rep.add(col + ": support dominates column", not_dominant.empty(), not_dominant);
    rep.add(col + ": support inside block", off_block.empty(), off_block);
  }
  return rep;
}

Report verify_uniqueness(const DecompositionMatrix& d) {
  Report rep("uniqueness under alternate monomials");
  try {
    const auto alt = canonical_basis(d.n(), d.context(), PeelStrategy::LargestResidue);
    std::size_t differing = 0;
    for (const auto& [rc, p] : d.entries())
      if (alt.entry(rc.first, rc.second) != p) ++differing;
    for (const auto& [rc, p] : alt.entries())
      if (d.entry(rc.first, rc.second).is_zero()) ++differing;
    rep.add("largest-residue peeling reproduces the matrix", alt == d,
            alt == d ? "" : std::to_string(differing) + " differing entries");
  } catch (const ConventionFault& e) {
    rep.add("largest-residue peeling reproduces the matrix", false, e.what());
  }
  return rep;
}

Report verify_dimensions(const DecompositionMatrix& d) {
  Report rep("dimensions at q = 1");
  try {
    const auto at_one = decomposition_at_one(d);
    std::ostringstream os;
    for (const auto& mu : d.cols()) os << to_string(mu) << ':' << at_one.dims.at(mu) << ' ';
    rep.add("positive integral dims solving #Std rows", true, os.str());
  } catch (const ConsistencyError& e) {
    rep.add("positive integral dims solving #Std rows", false, e.what());
  }
  return rep;
}

Report verify_mullineux(int n, const FockContext& ctx) {
  Report rep("Mullineux map, n = " + std::to_string(n));
  const auto source = enumerate_kleshchev(n, ctx);
  const auto twisted = ctx.twisted();
  const auto target = enumerate_kleshchev(n, twisted);
  const std::set<Multipartition> target_set(target.begin(), target.end());
  rep.add("|Klesh| = |Klesh'|", source.size() == target.size(),
          std::to_string(source.size()) + " vs " + std::to_string(target.size()));

  std::set<Multipartition> images;
  std::string outside;
  std::string not_inverted;
  for (const auto& mu : source) {
    try {
      const auto m = mullineux(mu, ctx);
      images.insert(m);
      if (!target_set.count(m)) append(outside, to_string(mu) + " -> " + to_string(m));
      if (mullineux(m, twisted) != mu) append(not_inverted, to_string(mu) + " -> " + to_string(m));
    } catch (const ConventionFault& e) {
      append(outside, e.what());
    }
  }
  rep.add("images are Kleshchev for the twisted charge", outside.empty(), outside);
  rep.add("injective", images.size() == source.size());
  rep.add("twisted map inverts it", not_inverted.empty(), not_inverted);
  return rep;
}

Report verify_commutators(const FockContext& ctx, int samples, int max_size, std::uint64_t seed) {
  Report rep("commutator identity [E_i, F_j]");
  std::vector<Multipartition> pool;
  for (int m = 0; m <= max_size; ++m)
    for (auto& la : multipartitions_of(m, ctx.level())) pool.push_back(std::move(la));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  int failures = 0;
  std::string first_failure;
  for (int s = 0; s < samples; ++s) {
    const Multipartition& la = pool[pick(rng)];
    Residue i;
    Residue j;
    if (ctx.e.is_finite()) {
      std::uniform_int_distribution<int> res(0, ctx.e.value() - 1);
      i = res(rng);
      j = res(rng);
    } else {
      // Residues near the diagram's content range; anything further out acts trivially.
      const int span = 2 * max_size + 4;
      int lo = 0;
      for (int k : ctx.charge.kappas) lo = std::min(lo, -k);
      std::uniform_int_distribution<int> res(lo - span, lo + span + 2 * std::abs(lo));
      i = res(rng);
      j = (rng() % 2 == 0) ? i : res(rng);
    }
    FockVector basis(ctx);
    basis.add_term(la, LaurentPoly(1));
    FockVector lhs = e_action(i, f_action(j, basis));
    lhs -= f_action(j, e_action(i, basis));
    FockVector rhs(ctx);
    if (i == j) {
      const int w = weight_ci(la, i, ctx);
      LaurentPoly qint = w >= 0 ? quantum_int(w) : -quantum_int(-w);
      rhs.add_term(la, qint);
    }
    if (!(lhs == rhs)) {
      ++failures;
      if (first_failure.empty())
        first_failure = "la = " + to_string(la) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
    }
  }
  rep.add(std::to_string(samples) + " random samples", failures == 0,
          failures == 0 ? "" : std::to_string(failures) + " failures, first at " + first_failure);
  return rep;
}

Report audit_report(const DegreeAudit& audit) {
  Report rep("degree audit");
  for (const auto& col : audit.columns) {
    std::ostringstream os;
    os << "cap " << col.cap << ", final max " << col.max_final_degree << ", intermediate max "
       << col.max_intermediate_degree << (col.intermediate_exceeds_cap ? " (intermediate above cap)" : "")
       << ", histogram";
    for (const auto& [deg, count] : col.histogram) os << ' ' << deg << ':' << count;
    rep.add("column " + to_string(col.mu) + ": final degrees within cap", !col.final_exceeds_cap, os.str());
  }
  return rep;
}

}  // namespace fockcanon
