#include "fockcanon/multipartition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockcanon {

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end)
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void partitions_into(int m, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(m, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(m - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transposed() const {
  if (parts_.empty()) return {};
  std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(std::move(t));
}

std::ostream& operator<<(std::ostream& os, const Node& n) {
  return os << '(' << n.component << ',' << n.row << ',' << n.col << ')';
}

// ----------------------------------------------------------- Multipartition

Multipartition::Multipartition(std::size_t level) : components_(level) {
  if (level == 0) throw std::invalid_argument("multipartition level must be at least 1");
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition level must be at least 1");
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : components_) s += p.size();
  return s;
}

bool Multipartition::contains(const Node& a) const {
  if (a.component < 1 || a.component > static_cast<int>(level()) || a.row < 1 || a.col < 1) return false;
  return a.col <= component(a.component).row(a.row);
}

Multipartition Multipartition::with_node(const Node& a) const {
  if (a.component < 1 || a.component > static_cast<int>(level()))
    throw std::invalid_argument("node component out of range");
  const Partition& p = component(a.component);
  if (a.col != p.row(a.row) + 1 || (a.row > 1 && p.row(a.row - 1) < a.col))
    throw std::invalid_argument("node is not addable");
  std::vector<int> parts = p.parts();
  if (a.row == static_cast<int>(parts.size()) + 1)
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(a.row - 1)];
  auto comps = components_;
  comps[static_cast<std::size_t>(a.component - 1)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::without_node(const Node& a) const {
  if (!contains(a)) throw std::invalid_argument("node is not in the diagram");
  const Partition& p = component(a.component);
  if (a.col != p.row(a.row) || p.row(a.row + 1) >= a.col) throw std::invalid_argument("node is not removable");
  std::vector<int> parts = p.parts();
  --parts[static_cast<std::size_t>(a.row - 1)];
  auto comps = components_;
  comps[static_cast<std::size_t>(a.component - 1)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

std::string to_string(const Multipartition& la) {
  std::string out;
  for (std::size_t k = 0; k < la.level(); ++k) {
    if (k > 0) out += '|';
    const auto& parts = la.components()[k].parts();
    if (parts.empty()) {
      out += '-';
      continue;
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(parts[j]);
    }
  }
  return out;
}

Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  for (auto piece : split(text, '|')) {
    if (piece == "-") {
      comps.emplace_back();
      continue;
    }
    std::vector<int> parts;
    for (auto tok : split(piece, ',')) {
      const int v = parse_int(tok, "part");
      if (v <= 0) throw std::invalid_argument("parts must be positive integers");
      parts.push_back(v);
    }
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

std::ostream& operator<<(std::ostream& os, const Multipartition& la) { return os << to_string(la); }

// ------------------------------------------------------ residue bookkeeping

Characteristic::Characteristic(int e) : e_(e) {
  if (e < 2) throw std::invalid_argument("quantum characteristic e must be at least 2 (or inf)");
}

Characteristic Characteristic::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinite();
  return Characteristic(parse_int(text, "e"));
}

int Characteristic::value() const {
  if (!is_finite()) throw std::logic_error("infinite characteristic has no modulus");
  return e_;
}

int Characteristic::reduce(long long x) const {
  if (!is_finite()) return static_cast<int>(x);
  const long long r = x % e_;
  return static_cast<int>(r < 0 ? r + e_ : r);
}

std::string Characteristic::to_string() const { return is_finite() ? std::to_string(e_) : "inf"; }

Charge Charge::twisted() const {
  Charge out;
  for (auto it = kappas.rbegin(); it != kappas.rend(); ++it) out.kappas.push_back(-*it);
  return out;
}

std::string to_string(const Charge& c) {
  std::string out;
  for (std::size_t k = 0; k < c.kappas.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(c.kappas[k]);
  }
  return out;
}

Charge parse_charge(std::string_view text) {
  Charge c;
  for (auto tok : split(text, ',')) c.kappas.push_back(parse_int(tok, "charge"));
  return c;
}

FockContext::FockContext(Characteristic e_, Charge charge_) : e(e_), charge(std::move(charge_)) {
  if (charge.kappas.empty()) throw std::invalid_argument("charge must have at least one entry");
}

std::vector<Residue> FockContext::residues_for(const Multipartition& la) const {
  std::vector<Residue> out;
  if (e.is_finite()) {
    out.resize(static_cast<std::size_t>(e.value()));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (const auto& a : addable_nodes(la)) out.push_back(residue(a, *this));
  for (const auto& a : removable_nodes(la)) out.push_back(residue(a, *this));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --------------------------------------------------------------- operations

std::vector<Node> diagram(const Multipartition& la) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(la.size()));
  for (int k = 1; k <= static_cast<int>(la.level()); ++k) {
    const auto& parts = la.component(k).parts();
    for (int r = 1; r <= static_cast<int>(parts.size()); ++r)
      for (int c = 1; c <= parts[static_cast<std::size_t>(r - 1)]; ++c) out.push_back({k, r, c});
  }
  return out;
}

Multipartition conjugate(const Multipartition& la) {
  std::vector<Partition> comps(la.components().rbegin(), la.components().rend());
  for (auto& p : comps) p = p.transposed();
  return Multipartition(std::move(comps));
}

bool dominates(const Multipartition& la, const Multipartition& mu) {
  if (la.level() != mu.level()) throw std::invalid_argument("dominates: level mismatch");
  if (la.size() != mu.size()) throw std::invalid_argument("dominates: size mismatch");
  int base_la = 0;
  int base_mu = 0;
  for (int s = 1; s <= static_cast<int>(la.level()); ++s) {
    const auto& a = la.component(s);
    const auto& b = mu.component(s);
    const int rows = static_cast<int>(std::max(a.length(), b.length()));
    int sum_la = base_la;
    int sum_mu = base_mu;
    for (int k = 1; k <= rows; ++k) {
      sum_la += a.row(k);
      sum_mu += b.row(k);
      if (sum_la < sum_mu) return false;
    }
    if (base_la + a.size() < base_mu + b.size()) return false;
    base_la += a.size();
    base_mu += b.size();
  }
  return true;
}

Residue residue(const Node& a, const Characteristic& e, const Charge& kappa) {
  const int l = static_cast<int>(kappa.level());
  if (a.component < 1 || a.component > l) throw std::invalid_argument("residue: node component exceeds charge length");
  const long long raw = -static_cast<long long>(kappa.kappas[static_cast<std::size_t>(l - a.component)]) + a.col - a.row;
  return e.reduce(raw);
}

std::vector<Node> addable_nodes(const Multipartition& la) {
  std::vector<Node> out;
  for (int k = 1; k <= static_cast<int>(la.level()); ++k) {
    const auto& p = la.component(k);
    for (int r = 1; r <= static_cast<int>(p.length()) + 1; ++r)
      if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({k, r, p.row(r) + 1});
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& la) {
  std::vector<Node> out;
  for (int k = 1; k <= static_cast<int>(la.level()); ++k) {
    const auto& p = la.component(k);
    for (int r = 1; r <= static_cast<int>(p.length()); ++r)
      if (p.row(r) > p.row(r + 1)) out.push_back({k, r, p.row(r)});
  }
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& la, Residue i, const FockContext& ctx) {
  auto all = addable_nodes(la);
  std::erase_if(all, [&](const Node& a) { return residue(a, ctx) != i; });
  return all;
}

std::vector<Node> removable_nodes(const Multipartition& la, Residue i, const FockContext& ctx) {
  auto all = removable_nodes(la);
  std::erase_if(all, [&](const Node& a) { return residue(a, ctx) != i; });
  return all;
}

namespace {

BigInt count_std_memo(const Multipartition& la, std::map<Multipartition, BigInt>& memo) {
  if (la.empty()) return 1;
  if (auto it = memo.find(la); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& a : removable_nodes(la)) total += count_std_memo(la.without_node(a), memo);
  memo.emplace(la, total);
  return total;
}

}  // namespace

BigInt count_std(const Multipartition& la) {
  std::map<Multipartition, BigInt> memo;
  return count_std_memo(la, memo);
}

bool e_restricted(const Partition& mu, const Characteristic& e) {
  if (!e.is_finite()) return true;
  for (int k = 1; k <= static_cast<int>(mu.length()); ++k)
    if (mu.row(k) - mu.row(k + 1) >= e.value()) return false;
  return true;
}

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(m, m, prefix, out);
  return out;
}

std::vector<Multipartition> multipartitions_of(int n, std::size_t level) {
  if (n < 0) throw std::invalid_argument("multipartitions_of: negative size");
  if (level == 0) throw std::invalid_argument("multipartitions_of: level must be at least 1");
  std::vector<std::vector<Partition>> by_size;
  for (int m = 0; m <= n; ++m) by_size.push_back(partitions_of(m));

  std::vector<Multipartition> out;
  std::vector<Partition> current;
  auto recurse = [&](auto&& self, int remaining, std::size_t k) -> void {
    if (k + 1 == level) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int m = remaining; m >= 0; --m)
      for (const auto& p : by_size[static_cast<std::size_t>(m)]) {
        current.push_back(p);
        self(self, remaining - m, k + 1);
        current.pop_back();
      }
  };
  recurse(recurse, n, 0);
  return out;
}

std::vector<int> dominance_key(const Multipartition& la) {
  const int n = la.size();
  std::vector<int> key;
  key.reserve(la.level() * static_cast<std::size_t>(n));
  int sum = 0;
  for (const auto& p : la.components())
    for (int k = 1; k <= n; ++k) {
      sum += p.row(k);
      key.push_back(sum);
    }
  return key;
}

void sort_by_dominance(std::vector<Multipartition>& v) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  keyed.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) keyed.emplace_back(dominance_key(v[j]), j);
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return to_string(v[a.second]) < to_string(v[b.second]);
  });
  std::vector<Multipartition> sorted;
  sorted.reserve(v.size());
  for (const auto& [key, j] : keyed) sorted.push_back(v[j]);
  v = std::move(sorted);
}

}  // namespace fockcanon
