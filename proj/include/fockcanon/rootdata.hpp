#pragma once

// Root and weight bookkeeping for affine type A^(1)_{e-1} (type A_infinity
// when e is infinite): the Cartan pairing, the highest weight of the vacuum,
// beta_lambda, defect and blocks.

#include <map>
#include <ostream>
#include <string>

#include "fockcanon/multipartition.hpp"

namespace fockcanon {

/// Element of Q+ written in the simple roots alpha_i; zero entries are not stored.
struct RootVector {
  std::map<Residue, int> mult;

  int operator[](Residue i) const {
    auto it = mult.find(i);
    return it == mult.end() ? 0 : it->second;
  }
  int height() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Element of P+ written in the fundamental weights Lambda_i.
struct Weight {
  std::map<Residue, int> mult;

  int operator[](Residue i) const {
    auto it = mult.find(i);
    return it == mult.end() ? 0 : it->second;
  }
  int level() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const RootVector& beta);
std::string to_string(const Weight& w);

/// Cartan matrix entry a_ij (symmetric). e = 2 gives the affine A_1 entries -2.
int cartan(Residue i, Residue j, const Characteristic& e);

/// Lambda' = sum_i l_i Lambda_i with l_i = #{l : i = -kappa_l mod e}.
Weight weight_from_charge(const Characteristic& e, const Charge& kappa);

/// beta_lambda = sum over nodes of alpha_{res A}.
RootVector beta(const Multipartition& la, const FockContext& ctx);

/// (Lambda, beta) with (Lambda_i, alpha_j) = delta_ij.
long long pairing(const Weight& w, const RootVector& beta);
/// (beta, gamma) through the Cartan matrix.
long long pairing(const RootVector& beta, const RootVector& gamma, const Characteristic& e);

/// (Lambda', beta) - (beta, beta)/2. Throws ConsistencyError if the value is
/// not a non-negative integer.
int defect(const RootVector& beta, const FockContext& ctx);
int defect(const Multipartition& la, const FockContext& ctx);

/// beta(la) == beta(mu). Throws std::invalid_argument on size mismatch.
bool same_block(const Multipartition& la, const Multipartition& mu, const FockContext& ctx);

}  // namespace fockcanon
