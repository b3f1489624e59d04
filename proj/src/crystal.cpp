#include "fockcanon/crystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockcanon/errors.hpp"

namespace fockcanon {

Signature i_signature(const Multipartition& la, Residue i, const FockContext& ctx) {
  Signature sig;
  const auto add = addable_nodes(la, i, ctx);
  const auto rem = removable_nodes(la, i, ctx);
  std::size_t a = 0;
  std::size_t r = 0;
  while (a < add.size() || r < rem.size()) {
    if (r == rem.size() || (a < add.size() && add[a] < rem[r]))
      sig.full.push_back({add[a++], true});
    else
      sig.full.push_back({rem[r++], false});
  }
  // Stack reduction: a '+' immediately following a surviving '-' cancels it.
  for (const auto& m : sig.full) {
    if (m.addable && !sig.reduced.empty() && !sig.reduced.back().addable)
      sig.reduced.pop_back();
    else
      sig.reduced.push_back(m);
  }
  for (const auto& m : sig.reduced) (m.addable ? sig.phi : sig.epsilon)++;
  return sig;
}

std::optional<Multipartition> f_tilde(Residue i, const Multipartition& la, const FockContext& ctx) {
  const auto sig = i_signature(la, i, ctx);
  if (sig.phi == 0) return std::nullopt;
  // Reduced form is +^phi -^eps, so the rightmost '+' sits at index phi-1.
  return la.with_node(sig.reduced[static_cast<std::size_t>(sig.phi - 1)].node);
}

std::optional<Multipartition> e_tilde(Residue i, const Multipartition& la, const FockContext& ctx) {
  const auto sig = i_signature(la, i, ctx);
  if (sig.epsilon == 0) return std::nullopt;
  return la.without_node(sig.reduced[static_cast<std::size_t>(sig.phi)].node);
}

namespace {

// Walks la down to a source vertex by greedy good-node removal (smallest residue
// first), recording residues in removal order.
Multipartition descend(Multipartition la, const FockContext& ctx, ResiduePath* removed) {
  for (;;) {
    bool moved = false;
    for (Residue i : ctx.residues_for(la)) {
      if (auto next = e_tilde(i, la, ctx)) {
        la = std::move(*next);
        if (removed) removed->push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) return la;
  }
}

}  // namespace

bool is_kleshchev(const Multipartition& la, const FockContext& ctx) {
  if (la.level() != ctx.level()) throw std::invalid_argument("is_kleshchev: level does not match charge");
  return descend(la, ctx, nullptr).empty();
}

std::vector<Multipartition> enumerate_kleshchev(int n, const FockContext& ctx) {
  if (n < 0) throw std::invalid_argument("enumerate_kleshchev: negative size");
  std::set<Multipartition> layer{Multipartition(ctx.level())};
  for (int m = 0; m < n; ++m) {
    std::set<Multipartition> next;
    for (const auto& la : layer)
      for (Residue i : ctx.residues_for(la))
        if (auto mu = f_tilde(i, la, ctx)) next.insert(std::move(*mu));
    layer = std::move(next);
  }
  std::vector<Multipartition> out(layer.begin(), layer.end());
  sort_by_dominance(out);
  return out;
}

ResiduePath crystal_path(const Multipartition& mu, const FockContext& ctx) {
  if (mu.level() != ctx.level()) throw std::invalid_argument("crystal_path: level does not match charge");
  ResiduePath removed;
  if (!descend(mu, ctx, &removed).empty())
    throw std::invalid_argument("crystal_path: " + to_string(mu) + " is not Kleshchev");
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::optional<Multipartition> replay_path(const ResiduePath& path, const FockContext& ctx) {
  Multipartition la(ctx.level());
  for (Residue i : path) {
    auto next = f_tilde(i, la, ctx);
    if (!next) return std::nullopt;
    la = std::move(*next);
  }
  return la;
}

Multipartition mullineux(const Multipartition& mu, const FockContext& ctx) {
  ResiduePath path = crystal_path(mu, ctx);
  for (auto& i : path) i = ctx.e.reduce(-static_cast<long long>(i));
  auto image = replay_path(path, ctx.twisted());
  if (!image)
    throw ConventionFault("mullineux: negated path of " + to_string(mu) + " is not defined in the twisted crystal");
  return *image;
}

}  // namespace fockcanon
