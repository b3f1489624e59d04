#pragma once

// The level-l combinatorial Fock space: finite Z[q,q^-1]-combinations of
// basis vectors s_lambda, with the action of the Chevalley generators E_i, F_i.
//
// Exponent convention, relative to the global reading order on nodes:
//   F_i s_la = sum_A q^{N_after(A)} s_{la+A}     (A addable i-node)
//   E_i s_la = sum_B q^{-N_before(B)} s_{la-B}   (B removable i-node)
// where N counts addable minus removable i-nodes of la strictly after/before
// the node. These satisfy [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1).

#include <map>
#include <optional>

#include "fockcanon/laurent_poly.hpp"
#include "fockcanon/multipartition.hpp"

namespace fockcanon {

class FockVector {
 public:
  using Terms = std::map<Multipartition, LaurentPoly>;

  explicit FockVector(FockContext ctx) : ctx_(std::move(ctx)) {}

  const FockContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  /// Common size of all basis vectors in the support; empty for the zero vector.
  std::optional<int> size_grading() const;

  LaurentPoly coefficient(const Multipartition& la) const;

  /// Adds c * s_la; zero coefficients are dropped. Throws std::invalid_argument
  /// for a level mismatch or a size different from the existing support.
  void add_term(const Multipartition& la, const LaurentPoly& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator*(const LaurentPoly& c, const FockVector& v);

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  FockContext ctx_;
  Terms terms_;
};

/// s_empty with coefficient 1.
FockVector vacuum(const FockContext& ctx);

FockVector f_action(Residue i, const FockVector& v);
FockVector e_action(Residue i, const FockVector& v);

/// <wt(la), alpha_i^vee> = #addable i-nodes - #removable i-nodes.
int weight_ci(const Multipartition& la, Residue i, const FockContext& ctx);

/// F_i^(k) v = F_i^k v / [k]!. Throws InexactDivision if any coefficient is not
/// divisible by [k]! (which would mean the action conventions are inconsistent).
FockVector divided_power_f(Residue i, int k, const FockVector& v);

}  // namespace fockcanon
