#pragma once

// Partitions, multipartitions and their diagrams, together with the residue
// data (quantum characteristic e and multicharge) that colours the nodes.
//
// Nodes are visited in one global reading order everywhere in the library:
// component ascending, then row ascending, then column ascending.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fockcanon/big_int.hpp"

namespace fockcanon {

/// Weakly decreasing sequence of positive parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  /// Row length (1-based); zero beyond the last row.
  int row(int r) const { return r >= 1 && r <= static_cast<int>(parts_.size()) ? parts_[r - 1] : 0; }

  Partition transposed() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Box (component, row, column) of a multipartition diagram, all 1-based.
struct Node {
  int component = 1;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;
};

std::ostream& operator<<(std::ostream& os, const Node& n);

/// Ordered l-tuple of partitions (l >= 1).
class Multipartition {
 public:
  /// The empty multipartition of the given level.
  explicit Multipartition(std::size_t level = 1);
  explicit Multipartition(std::vector<Partition> components);

  std::size_t level() const { return components_.size(); }
  int size() const;
  bool empty() const { return size() == 0; }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int k) const { return components_.at(static_cast<std::size_t>(k - 1)); }

  bool contains(const Node& a) const;
  /// Adds/removes a node; throws std::invalid_argument if the result is not a diagram.
  Multipartition with_node(const Node& a) const;
  Multipartition without_node(const Node& a) const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Text grammar: components separated by '|', parts by ',', empty component '-'.
std::string to_string(const Multipartition& la);
Multipartition parse_multipartition(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Multipartition& la);

/// Quantum characteristic: an integer e >= 2, or infinity (residues live in Z).
class Characteristic {
 public:
  /// Throws std::invalid_argument for e < 2.
  explicit Characteristic(int e);
  static Characteristic infinite() { return Characteristic(); }
  /// Accepts an integer >= 2 or "inf".
  static Characteristic parse(std::string_view text);

  bool is_finite() const { return e_ != 0; }
  /// The modulus; throws std::logic_error when infinite.
  int value() const;
  /// Reduces an integer into {0,...,e-1}; identity when infinite.
  int reduce(long long x) const;
  std::string to_string() const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;

 private:
  Characteristic() = default;
  int e_ = 0;
};

/// Element of I = Z/eZ, stored reduced into {0,...,e-1}; any integer when e is infinite.
using Residue = int;

/// Multicharge (kappa_1, ..., kappa_l).
struct Charge {
  std::vector<int> kappas;

  std::size_t level() const { return kappas.size(); }
  /// (-kappa_l, ..., -kappa_1).
  Charge twisted() const;

  friend bool operator==(const Charge&, const Charge&) = default;
};

std::string to_string(const Charge& c);
Charge parse_charge(std::string_view text);

/// The residue data (e, kappa) a multipartition's nodes are coloured with.
struct FockContext {
  Characteristic e;
  Charge charge;

  FockContext(Characteristic e_, Charge charge_);

  std::size_t level() const { return charge.level(); }
  /// Context for the twisted charge, same e.
  FockContext twisted() const { return FockContext(e, charge.twisted()); }
  /// Residues to scan when looking for i-nodes of the given multipartition:
  /// all of Z/eZ, or for infinite e the residues occurring on its addable/removable nodes.
  std::vector<Residue> residues_for(const Multipartition& la) const;

  friend bool operator==(const FockContext&, const FockContext&) = default;
};

/// All nodes of [la] in reading order.
std::vector<Node> diagram(const Multipartition& la);

/// [la'] = {(k,r,c) | (l-k+1,c,r) in [la]}.
Multipartition conjugate(const Multipartition& la);

/// Dominance on multipartitions of the same size and level.
/// Throws std::invalid_argument on size or level mismatch.
bool dominates(const Multipartition& la, const Multipartition& mu);

/// res(k,r,c) = -kappa_{l+1-k} + c - r, reduced modulo e.
Residue residue(const Node& a, const Characteristic& e, const Charge& kappa);
inline Residue residue(const Node& a, const FockContext& ctx) { return residue(a, ctx.e, ctx.charge); }

/// Every addable (resp. removable) node regardless of residue, in reading order.
std::vector<Node> addable_nodes(const Multipartition& la);
std::vector<Node> removable_nodes(const Multipartition& la);
/// Addable/removable i-nodes in reading order.
std::vector<Node> addable_nodes(const Multipartition& la, Residue i, const FockContext& ctx);
std::vector<Node> removable_nodes(const Multipartition& la, Residue i, const FockContext& ctx);

/// Number of standard tableaux of shape la.
BigInt count_std(const Multipartition& la);

/// mu_k - mu_{k+1} < e for every k (always true for infinite e).
bool e_restricted(const Partition& mu, const Characteristic& e);

/// All partitions of m, in reverse lexicographic order.
std::vector<Partition> partitions_of(int m);
/// All multipartitions of n with the given level.
std::vector<Multipartition> multipartitions_of(int n, std::size_t level);

/// Cumulative partial sums over (component, row), rows padded to n = |la|.
/// Lexicographic order on these keys is a linear extension of dominance.
std::vector<int> dominance_key(const Multipartition& la);
/// Most dominant first; a fixed total order refining dominance.
void sort_by_dominance(std::vector<Multipartition>& v);

}  // namespace fockcanon
