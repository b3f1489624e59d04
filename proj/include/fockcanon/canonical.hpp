#pragma once

// Canonical basis {G^mu : mu Kleshchev} of the highest-weight submodule of the
// Fock space generated by the vacuum, computed by the LLT method:
//
//   1. For each Kleshchev mu build a bar-invariant approximation
//      A(mu) = F_{i_m}^(k_m) ... F_{i_1}^(k_1) s_empty.
//   2. Subtract bar-invariant multiples of other G^nu, first from the least
//      dominant end until s_mu leads with coefficient 1, then until every
//      off-diagonal coefficient lies in qZ[q]. G^nu is finished on demand.
//
// The entries d_{la,mu}(q) of the result are graded decomposition numbers.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fockcanon/fock_space.hpp"
#include "fockcanon/multipartition.hpp"
#include "fockcanon/rootdata.hpp"

namespace fockcanon {

/// How monomial_for peels a Kleshchev multipartition back to the vacuum.
enum class PeelStrategy {
  GoodNode,        // smallest residue with a good removable node
  LargestResidue,  // largest residue with a good removable node
};

struct MonomialFactor {
  Residue residue;
  int multiplicity;

  friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

/// Divided-power word; factors[0] is applied to the vacuum first.
struct Monomial {
  std::vector<MonomialFactor> factors;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Peels maximal e~_i strings off mu. Throws std::invalid_argument for non-Kleshchev mu.
Monomial monomial_for(const Multipartition& mu, const FockContext& ctx,
                      PeelStrategy strategy = PeelStrategy::GoodNode);

/// The monomial applied to the vacuum.
FockVector aux_vector(const Monomial& m, const FockContext& ctx);

class DecompositionMatrix {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>;

  /// Rows and columns are taken as given (callers pass them in dominance order).
  DecompositionMatrix(FockContext ctx, int n, std::vector<Multipartition> rows, std::vector<Multipartition> cols);

  const FockContext& context() const { return ctx_; }
  int n() const { return n_; }
  const std::vector<Multipartition>& rows() const { return rows_; }
  const std::vector<Multipartition>& cols() const { return cols_; }
  const Entries& entries() const { return entries_; }

  std::optional<std::size_t> row_index(const Multipartition& la) const;
  std::optional<std::size_t> col_index(const Multipartition& mu) const;

  LaurentPoly entry(std::size_t row, std::size_t col) const;
  /// Zero when la or mu does not index a row/column.
  LaurentPoly entry(const Multipartition& la, const Multipartition& mu) const;
  void set_entry(std::size_t row, std::size_t col, LaurentPoly p);

  /// G^mu for column col.
  FockVector column(std::size_t col) const;

  /// Largest coefficient degree seen in any working vector while reducing each
  /// column (diagnostic only; not part of equality).
  const std::vector<int>& intermediate_degrees() const { return intermediate_; }
  void set_intermediate_degrees(std::vector<int> d) { intermediate_ = std::move(d); }

  friend bool operator==(const DecompositionMatrix& a, const DecompositionMatrix& b) {
    return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  FockContext ctx_;
  int n_;
  std::vector<Multipartition> rows_;
  std::vector<Multipartition> cols_;
  std::map<Multipartition, std::size_t> row_pos_;
  std::map<Multipartition, std::size_t> col_pos_;
  Entries entries_;
  std::vector<int> intermediate_;
};

/// Rows: all multipartitions of n; columns: Kleshchev multipartitions of n;
/// both most dominant first.
///
/// Throws ConventionFault (or a subclass) when the reduced leading coefficient
/// is not 1, a reduction needs a non-Kleshchev or mutually dependent G^nu, a
/// divided power is not integral, or the reduction does not terminate.
DecompositionMatrix canonical_basis(int n, const FockContext& ctx,
                                    PeelStrategy strategy = PeelStrategy::GoodNode);

struct DimensionsAtOne {
  /// d_{la,mu}(1), indexed like the matrix rows and columns.
  std::vector<std::vector<BigInt>> matrix;
  /// dim D^mu for every Kleshchev mu.
  std::map<Multipartition, BigInt> dims;
};

/// Specializes at q = 1 and solves #Std(la) = sum_mu d_{la,mu}(1) dim D^mu.
/// Throws ConsistencyError if some dimension is not positive or some row
/// fails the identity.
DimensionsAtOne decomposition_at_one(const DecompositionMatrix& d);

struct Block {
  RootVector beta;
  int defect = 0;
  std::vector<Multipartition> members;  // most dominant first
};

/// Multipartitions of n grouped by beta, ordered by their most dominant member.
std::vector<Block> block_decomposition(int n, const FockContext& ctx);

struct DegreeAudit {
  struct Column {
    Multipartition mu;
    int cap = 0;                       // defect(mu)
    std::map<int, int> histogram;      // final entry degree -> count
    int max_final_degree = 0;
    int max_intermediate_degree = 0;
    bool final_exceeds_cap = false;
    bool intermediate_exceeds_cap = false;
  };
  std::vector<Column> columns;

  int final_flags() const;
  int intermediate_flags() const;
};

DegreeAudit degree_audit(const DecompositionMatrix& d);

}  // namespace fockcanon
