#include "fockcanon/canonical.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

#include "fockcanon/crystal.hpp"
#include "fockcanon/errors.hpp"

namespace fockcanon {

Monomial monomial_for(const Multipartition& mu, const FockContext& ctx, PeelStrategy strategy) {
  if (mu.level() != ctx.level()) throw std::invalid_argument("monomial_for: level does not match charge");
  Monomial m;
  Multipartition la = mu;
  while (!la.empty()) {
    std::optional<Residue> chosen;
    int eps = 0;
    for (Residue i : ctx.residues_for(la)) {
      const int e_i = i_signature(la, i, ctx).epsilon;
      if (e_i == 0) continue;
      chosen = i;
      eps = e_i;
      if (strategy == PeelStrategy::GoodNode) break;
    }
    if (!chosen) throw std::invalid_argument("monomial_for: " + to_string(mu) + " is not Kleshchev");
    for (int j = 0; j < eps; ++j) la = *e_tilde(*chosen, la, ctx);
    m.factors.push_back({*chosen, eps});
  }
  std::reverse(m.factors.begin(), m.factors.end());
  return m;
}

FockVector aux_vector(const Monomial& m, const FockContext& ctx) {
  FockVector v = vacuum(ctx);
  for (const auto& f : m.factors) v = divided_power_f(f.residue, f.multiplicity, v);
  return v;
}

// ------------------------------------------------------ DecompositionMatrix

DecompositionMatrix::DecompositionMatrix(FockContext ctx, int n, std::vector<Multipartition> rows,
                                         std::vector<Multipartition> cols)
    : ctx_(std::move(ctx)), n_(n), rows_(std::move(rows)), cols_(std::move(cols)) {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (!row_pos_.emplace(rows_[r], r).second) throw std::invalid_argument("DecompositionMatrix: duplicate row");
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if (!col_pos_.emplace(cols_[c], c).second) throw std::invalid_argument("DecompositionMatrix: duplicate column");
  intermediate_.assign(cols_.size(), 0);
}

std::optional<std::size_t> DecompositionMatrix::row_index(const Multipartition& la) const {
  auto it = row_pos_.find(la);
  if (it == row_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DecompositionMatrix::col_index(const Multipartition& mu) const {
  auto it = col_pos_.find(mu);
  if (it == col_pos_.end()) return std::nullopt;
  return it->second;
}

LaurentPoly DecompositionMatrix::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? LaurentPoly{} : it->second;
}

LaurentPoly DecompositionMatrix::entry(const Multipartition& la, const Multipartition& mu) const {
  auto r = row_index(la);
  auto c = col_index(mu);
  if (!r || !c) return {};
  return entry(*r, *c);
}

void DecompositionMatrix::set_entry(std::size_t row, std::size_t col, LaurentPoly p) {
  if (row >= rows_.size() || col >= cols_.size()) throw std::out_of_range("DecompositionMatrix: index out of range");
  if (p.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = std::move(p);
}

FockVector DecompositionMatrix::column(std::size_t col) const {
  FockVector v(ctx_);
  for (const auto& [rc, p] : entries_)
    if (rc.second == col) v.add_term(rows_[rc.first], p);
  return v;
}

// ------------------------------------------------------------ the algorithm

namespace {

std::vector<FockVector> approximations(const std::vector<Multipartition>& cols, const FockContext& ctx,
                                       PeelStrategy strategy) {
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<FockVector> out(cols.size(), FockVector(ctx));
  auto work = [&](std::size_t first) {
    for (std::size_t c = first; c < cols.size(); c += workers) out[c] = aux_vector(monomial_for(cols[c], ctx, strategy), ctx);
  };
  if (cols.size() < 4 || workers == 1) {
    for (std::size_t c = 0; c < cols.size(); ++c) out[c] = aux_vector(monomial_for(cols[c], ctx, strategy), ctx);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work, w));
  for (auto& j : jobs) j.get();
  return out;
}


// Phase 2 state. Columns are finished most dominant first, except that a column
// whose reduction needs an unfinished G^nu finishes nu first: at level >= 2 an
// approximation A(mu) can involve G^nu for nu incomparable with, or even
// dominated by, mu.
class Reducer {
 public:
  Reducer(DecompositionMatrix& d, std::vector<FockVector> approx)
      : d_(d), approx_(std::move(approx)), state_(approx_.size(), State::Pending), finished_(approx_.size()),
        intermediate_(approx_.size(), 0) {}

  void run() {
    for (std::size_t c = 0; c < approx_.size(); ++c) finish(c);
    for (std::size_t c = 0; c < approx_.size(); ++c)
      for (const auto& [la, coeff] : finished_[c]->terms()) d_.set_entry(*d_.row_index(la), c, coeff);
    d_.set_intermediate_degrees(std::move(intermediate_));
  }

 private:
  enum class State { Pending, InProgress, Done };

  static int max_coefficient_degree(const FockVector& v) {
    int d = 0;
    bool any = false;
    for (const auto& [la, c] : v.terms()) {
      d = any ? std::max(d, c.max_deg()) : c.max_deg();
      any = true;
    }
    return d;
  }

  // Row position in the dominance order; larger means less dominant.
  std::size_t row_of(const Multipartition& la) const { return *d_.row_index(la); }

  const FockVector& require(std::size_t needed_by, const Multipartition& nu) {
    const auto nu_col = d_.col_index(nu);
    const Multipartition& mu = d_.cols()[needed_by];
    if (!nu_col)
      throw TriangularityViolation("canonical_basis: column " + to_string(mu) + " cannot be reduced at the " +
                                   "non-Kleshchev row " + to_string(nu));
    if (state_[*nu_col] == State::InProgress)
      throw TriangularityViolation("canonical_basis: columns " + to_string(mu) + " and " + to_string(nu) +
                                   " depend on each other");
    finish(*nu_col);
    return *finished_[*nu_col];
  }

  void finish(std::size_t c) {
    if (state_[c] == State::Done) return;
    const Multipartition& mu = d_.cols()[c];
    state_[c] = State::InProgress;
    FockVector work = approx_[c];
    int max_deg = max_coefficient_degree(work);
    const std::size_t bound = d_.cols().size() * std::max<std::size_t>(1, work.support_size()) + d_.cols().size();
    std::size_t steps = 0;
    auto step = [&] {
      if (++steps > bound)
        throw ConventionFault("canonical_basis: reduction of column " + to_string(mu) + " did not terminate");
    };

    // A(mu) = G^mu + sum_nu a_nu G^nu with bar-invariant a_nu. Some nu may lie
    // below mu; the least dominant row of the support always carries exactly
    // such an a_nu, so peel those off first.
    for (;;) {
      if (work.is_zero()) throw ConventionFault("canonical_basis: approximation for " + to_string(mu) + " vanished");
      const Multipartition* lowest = nullptr;
      for (const auto& [la, coeff] : work.terms())
        if (!lowest || row_of(la) > row_of(*lowest)) lowest = &la;
      if (*lowest == mu) break;
      step();
      const Multipartition nu = *lowest;
      const LaurentPoly a = work.coefficient(nu);
      if (bar(a) != a)
        throw ConventionFault("canonical_basis: lowest coefficient " + to_string(a) + " at " + to_string(nu) +
                              " in the approximation for " + to_string(mu) + " is not bar-invariant");
      work -= a * require(c, nu);
      max_deg = std::max(max_deg, max_coefficient_degree(work));
    }
    if (work.coefficient(mu) != LaurentPoly(1))
      throw ConventionFault("canonical_basis: approximation for " + to_string(mu) + " has s_mu coefficient " +
                            to_string(work.coefficient(mu)) + " instead of 1");

    for (;;) {
      // Least dominant violator first: subtracting G^nu only touches rows that dominate nu.
      const Multipartition* violator = nullptr;
      for (const auto& [la, coeff] : work.terms()) {
        if (la == mu || coeff.in_q_z_q()) continue;
        if (!violator || row_of(la) > row_of(*violator)) violator = &la;
      }
      if (!violator) break;
      step();
      const Multipartition nu = *violator;
      const LaurentPoly m = bar_symmetric_part(work.coefficient(nu));
      work -= m * require(c, nu);
      max_deg = std::max(max_deg, max_coefficient_degree(work));
    }
    if (work.coefficient(mu) != LaurentPoly(1))
      throw ConventionFault("canonical_basis: reduction changed the s_mu coefficient of " + to_string(mu));
    intermediate_[c] = max_deg;
    finished_[c] = std::move(work);
    state_[c] = State::Done;
  }

  DecompositionMatrix& d_;
  std::vector<FockVector> approx_;
  std::vector<State> state_;
  std::vector<std::optional<FockVector>> finished_;
  std::vector<int> intermediate_;
};

}  // namespace

DecompositionMatrix canonical_basis(int n, const FockContext& ctx, PeelStrategy strategy) {
  if (n < 0) throw std::invalid_argument("canonical_basis: negative size");
  auto rows = multipartitions_of(n, ctx.level());
  sort_by_dominance(rows);
  auto cols = enumerate_kleshchev(n, ctx);
  DecompositionMatrix d(ctx, n, rows, cols);
  Reducer(d, approximations(d.cols(), ctx, strategy)).run();
  return d;
}

// ------------------------------------------------------- derived quantities

DimensionsAtOne decomposition_at_one(const DecompositionMatrix& d) {
  const auto& rows = d.rows();
  const auto& cols = d.cols();
  DimensionsAtOne out;
  out.matrix.assign(rows.size(), std::vector<BigInt>(cols.size(), BigInt(0)));
  for (const auto& [rc, p] : d.entries()) out.matrix[rc.first][rc.second] = p.at_one();

  // Row mu of a Kleshchev column only involves columns nu with mu dominating nu,
  // so least dominant first is a valid back-substitution order.
  for (std::size_t c = cols.size(); c-- > 0;) {
    const Multipartition& mu = cols[c];
    const std::size_t r = *d.row_index(mu);
    BigInt value = count_std(mu);
    for (std::size_t other = c + 1; other < cols.size(); ++other) value -= out.matrix[r][other] * out.dims.at(cols[other]);
    for (std::size_t other = 0; other < c; ++other)
      if (out.matrix[r][other] != 0)
        throw ConsistencyError("decomposition_at_one: row " + to_string(mu) + " meets the earlier column " +
                               to_string(cols[other]));
    if (out.matrix[r][c] != 1)
      throw ConsistencyError("decomposition_at_one: diagonal entry of " + to_string(mu) + " is not 1");
    if (value <= 0)
      throw ConsistencyError("decomposition_at_one: dim D^" + to_string(mu) + " = " + value.str() + " is not positive");
    out.dims.emplace(mu, value);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BigInt total = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) total += out.matrix[r][c] * out.dims.at(cols[c]);
    if (total != count_std(rows[r]))
      throw ConsistencyError("decomposition_at_one: row " + to_string(rows[r]) + " gives dimension " + total.str() +
                             " but #Std = " + count_std(rows[r]).str());
  }
  return out;
}

std::vector<Block> block_decomposition(int n, const FockContext& ctx) {
  auto all = multipartitions_of(n, ctx.level());
  sort_by_dominance(all);
  std::vector<Block> blocks;
  std::map<RootVector, std::size_t> index;
  for (const auto& la : all) {
    RootVector b = beta(la, ctx);
    auto [it, inserted] = index.try_emplace(b, blocks.size());
    if (inserted) blocks.push_back({b, defect(b, ctx), {}});
    blocks[it->second].members.push_back(la);
  }
  return blocks;
}

int DegreeAudit::final_flags() const {
  return static_cast<int>(std::count_if(columns.begin(), columns.end(), [](const Column& c) { return c.final_exceeds_cap; }));
}

int DegreeAudit::intermediate_flags() const {
  return static_cast<int>(
      std::count_if(columns.begin(), columns.end(), [](const Column& c) { return c.intermediate_exceeds_cap; }));
}

DegreeAudit degree_audit(const DecompositionMatrix& d) {
  DegreeAudit audit;
  for (std::size_t c = 0; c < d.cols().size(); ++c) {
    DegreeAudit::Column col;
    col.mu = d.cols()[c];
    col.cap = defect(col.mu, d.context());
    col.max_intermediate_degree = d.intermediate_degrees().at(c);
    audit.columns.push_back(std::move(col));
  }
  for (const auto& [rc, p] : d.entries()) {
    auto& col = audit.columns[rc.second];
    ++col.histogram[p.max_deg()];
    col.max_final_degree = std::max(col.max_final_degree, p.max_deg());
  }
  for (auto& col : audit.columns) {
    col.final_exceeds_cap = col.max_final_degree > col.cap;
    col.intermediate_exceeds_cap = col.max_intermediate_degree > col.cap;
  }
  return audit;
}

}  // namespace fockcanon
