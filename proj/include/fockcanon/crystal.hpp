#pragma once

// Kashiwara crystal on multipartitions.
//
// The i-signature lists the addable (+) and removable (-) i-nodes in reading
// order. Adjacent "-+" pairs cancel until the reduced form +^phi -^eps remains;
// f~_i adds the node of the rightmost surviving +, e~_i removes the node of
// the leftmost surviving -.

#include <optional>
#include <set>
#include <vector>

#include "fockcanon/multipartition.hpp"

namespace fockcanon {

struct SignatureMark {
  Node node;
  bool addable;  // '+' when true, '-' when false

  friend bool operator==(const SignatureMark&, const SignatureMark&) = default;
};

struct Signature {
  std::vector<SignatureMark> full;
  std::vector<SignatureMark> reduced;
  int epsilon = 0;
  int phi = 0;
};

/// The reduced i-signature together with eps_i and phi_i.
Signature i_signature(const Multipartition& la, Residue i, const FockContext& ctx);

std::optional<Multipartition> f_tilde(Residue i, const Multipartition& la, const FockContext& ctx);
std::optional<Multipartition> e_tilde(Residue i, const Multipartition& la, const FockContext& ctx);

/// Whether la lies in the connected component of the empty multipartition.
bool is_kleshchev(const Multipartition& la, const FockContext& ctx);

/// Kleshchev multipartitions of n, most dominant first.
std::vector<Multipartition> enumerate_kleshchev(int n, const FockContext& ctx);

using ResiduePath = std::vector<Residue>;

/// i_1..i_n with mu = f~_{i_n} ... f~_{i_1}(empty).
/// Throws std::invalid_argument for non-Kleshchev input.
ResiduePath crystal_path(const Multipartition& mu, const FockContext& ctx);

/// Follows a path of f~ steps from the empty multipartition; nullopt if some step is undefined.
std::optional<Multipartition> replay_path(const ResiduePath& path, const FockContext& ctx);

/// Image of a Kleshchev mu under the crystal isomorphism to the twisted-charge
/// crystal that negates residue paths. Since twisting is an involution, the same
/// function computes the inverse map when applied in the twisted context.
/// Throws ConventionFault if the negated path cannot be replayed.
Multipartition mullineux(const Multipartition& mu, const FockContext& ctx);

}  // namespace fockcanon
