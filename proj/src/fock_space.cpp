#include "fockcanon/fock_space.hpp"

#include <stdexcept>
#include <string>

#include "fockcanon/errors.hpp"

namespace fockcanon {

namespace {

// Addable (+1) and removable (-1) i-nodes of la, merged in reading order.
struct Mark {
  Node node;
  int sign;
};

std::vector<Mark> i_nodes(const Multipartition& la, Residue i, const FockContext& ctx) {
  std::vector<Mark> marks;
  auto add = addable_nodes(la, i, ctx);
  auto rem = removable_nodes(la, i, ctx);
  marks.reserve(add.size() + rem.size());
  std::size_t a = 0;
  std::size_t r = 0;
  while (a < add.size() || r < rem.size()) {
    if (r == rem.size() || (a < add.size() && add[a] < rem[r]))
      marks.push_back({add[a++], +1});
    else
      marks.push_back({rem[r++], -1});
  }
  return marks;
}

}  // namespace

std::optional<int> FockVector::size_grading() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

LaurentPoly FockVector::coefficient(const Multipartition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add_term(const Multipartition& la, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (la.level() != ctx_.level()) throw std::invalid_argument("FockVector: level does not match context");
  if (auto n = size_grading(); n && *n != la.size())
    throw std::invalid_argument("FockVector: mixing sizes " + std::to_string(*n) + " and " + std::to_string(la.size()));
  auto [it, inserted] = terms_.try_emplace(la, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (!(o.ctx_ == ctx_)) throw std::invalid_argument("FockVector: context mismatch");
  for (const auto& [la, c] : o.terms_) add_term(la, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (!(o.ctx_ == ctx_)) throw std::invalid_argument("FockVector: context mismatch");
  for (const auto& [la, c] : o.terms_) add_term(la, -c);
  return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& v) {
  FockVector out(v.ctx_);
  if (c.is_zero()) return out;
  for (const auto& [la, p] : v.terms_) out.terms_.emplace(la, c * p);
  return out;
}

FockVector vacuum(const FockContext& ctx) {
  FockVector v(ctx);
  v.add_term(Multipartition(ctx.level()), LaurentPoly(1));
  return v;
}

FockVector f_action(Residue i, const FockVector& v) {
  const auto& ctx = v.context();
  FockVector out(ctx);
  for (const auto& [la, c] : v.terms()) {
    const auto marks = i_nodes(la, i, ctx);
    // Suffix sums give N_after for each position.
    int after = 0;
    for (auto it = marks.rbegin(); it != marks.rend(); ++it) {
      if (it->sign > 0) out.add_term(la.with_node(it->node), c.shifted(after));
      after += it->sign;
    }
  }
  return out;
}

FockVector e_action(Residue i, const FockVector& v) {
  const auto& ctx = v.context();
  FockVector out(ctx);
  for (const auto& [la, c] : v.terms()) {
    const auto marks = i_nodes(la, i, ctx);
    int before = 0;
    for (const auto& m : marks) {
      if (m.sign < 0) out.add_term(la.without_node(m.node), c.shifted(-before));
      before += m.sign;
    }
  }
  return out;
}

int weight_ci(const Multipartition& la, Residue i, const FockContext& ctx) {
  return static_cast<int>(addable_nodes(la, i, ctx).size()) - static_cast<int>(removable_nodes(la, i, ctx).size());
}

FockVector divided_power_f(Residue i, int k, const FockVector& v) {
  if (k < 0) throw std::invalid_argument("divided_power_f: negative exponent");
  FockVector w = v;
  for (int j = 0; j < k; ++j) w = f_action(i, w);
  if (k <= 1) return w;
  const LaurentPoly fact = quantum_factorial(k);
  FockVector out(v.context());
  for (const auto& [la, c] : w.terms()) {
    try {
      out.add_term(la, exact_div(c, fact));
    } catch (const InexactDivision&) {
      throw InexactDivision("divided power F_" + std::to_string(i) + "^(" + std::to_string(k) +
                            "): coefficient " + to_string(c) + " of " + to_string(la) + " not divisible by [" +
                            std::to_string(k) + "]!");
    }
  }
  return out;
}

}  // namespace fockcanon
