#pragma once

// Checks on computed decomposition matrices and on the underlying Fock-space
// and crystal conventions. Each returns a Report; none of them throw on a
// failed check.

#include <cstdint>

#include "fockcanon/canonical.hpp"
#include "fockcanon/report.hpp"

namespace fockcanon {

/// Degree bound deg d_{la,mu} <= defect(mu), and for every entry the equivalence of
///   (a) deg d = defect(mu), (b) d = q^defect(mu), (c) la = conjugate(m^-1(mu)),
/// plus: each column has exactly one row attaining the bound.
Report verify_fayers(const DecompositionMatrix& d);

/// d_{mu,mu} = 1, off-diagonal entries in qN[q], support dominates the column,
/// support stays inside the column's block.
Report verify_structure(const DecompositionMatrix& d);

/// The alternate peeling strategy reproduces d entry for entry.
Report verify_uniqueness(const DecompositionMatrix& d);

/// decomposition_at_one succeeds (positive integral dims, every row consistent).
Report verify_dimensions(const DecompositionMatrix& d);

/// The Mullineux map is a bijection from Kleshchev(n, ctx) onto
/// Kleshchev(n, twisted ctx) whose twisted counterpart inverts it.
Report verify_mullineux(int n, const FockContext& ctx);

/// (E_i F_j - F_j E_i) s_la = delta_ij [weight_ci(la,i)] s_la on random samples of
/// multipartitions of size <= max_size.
Report verify_commutators(const FockContext& ctx, int samples, int max_size, std::uint64_t seed);

/// Final degrees against the defect cap; intermediate overshoot is reported in the
/// details of a passing check because the cap only constrains final entries.
Report audit_report(const DegreeAudit& audit);

}  // namespace fockcanon
