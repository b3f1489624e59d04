#pragma once

// Exact Laurent polynomials in one indeterminate q with coefficients in an
// integral domain Int (BigInt in the engine, plain integers in tests).
//
// Storage is dense: coefficient of q^(min_deg + k) at position k, with the
// first and last stored coefficients nonzero. The zero polynomial has no
// coefficients and min_deg 0.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fockcanon/big_int.hpp"
#include "fockcanon/errors.hpp"

namespace fockcanon {

template <typename Int>
class BasicLaurentPoly {
 public:
  using Scalar = Int;

  BasicLaurentPoly() = default;
  BasicLaurentPoly(Int constant) : coeffs_{std::move(constant)} { normalize(); }  // NOLINT

  static BasicLaurentPoly monomial(Int c, int degree) {
    BasicLaurentPoly p;
    p.min_deg_ = degree;
    p.coeffs_.push_back(std::move(c));
    p.normalize();
    return p;
  }

  static BasicLaurentPoly q_power(int degree) { return monomial(Int(1), degree); }

  static BasicLaurentPoly from_coeffs(int min_deg, std::vector<Int> coeffs) {
    BasicLaurentPoly p;
    p.min_deg_ = min_deg;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Lowest degree with a nonzero coefficient. Meaningless for zero.
  int min_deg() const { return min_deg_; }
  /// Highest degree with a nonzero coefficient. Meaningless for zero.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Usual degree; callers must check is_zero() first.
  int degree() const { return max_deg(); }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(int d) const {
    if (is_zero() || d < min_deg_ || d > max_deg()) return Int(0);
    return coeffs_[static_cast<std::size_t>(d - min_deg_)];
  }

  /// Value at q = 1.
  Int at_one() const {
    Int s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// True iff this is c * q^d for a single term.
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// True iff every term has strictly positive degree (zero included).
  bool in_q_z_q() const { return is_zero() || min_deg_ >= 1; }

  /// True iff every coefficient is non-negative.
  bool nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
  }

  BasicLaurentPoly shifted(int k) const {
    BasicLaurentPoly p = *this;
    if (!p.is_zero()) p.min_deg_ += k;
    return p;
  }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) { return accumulate(o, false); }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) { return accumulate(o, true); }

  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend BasicLaurentPoly operator+(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a += b; }
  friend BasicLaurentPoly operator-(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a -= b; }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coeffs(a.min_deg_ + b.min_deg_, std::move(out));
  }

 private:
  BasicLaurentPoly& accumulate(const BasicLaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(min_deg_, o.min_deg_);
    const int hi = std::max(max_deg(), o.max_deg());
    if (lo < min_deg_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_deg_ - lo), Int(0));
      min_deg_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      auto& slot = coeffs_[static_cast<std::size_t>(o.min_deg_ - lo) + k];
      if (subtract)
        slot -= o.coeffs_[k];
      else
        slot += o.coeffs_[k];
    }
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      min_deg_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    min_deg_ += static_cast<int>(first);
  }

  int min_deg_ = 0;
  std::vector<Int> coeffs_;
};

using LaurentPoly = BasicLaurentPoly<BigInt>;

/// The ring involution q -> q^-1.
template <typename Int>
BasicLaurentPoly<Int> bar(const BasicLaurentPoly<Int>& f) {
  if (f.is_zero()) return f;
  std::vector<Int> rev(f.coeffs().rbegin(), f.coeffs().rend());
  return BasicLaurentPoly<Int>::from_coeffs(-f.max_deg(), std::move(rev));
}

/// Balanced quantum integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k).
template <typename Int = BigInt>
BasicLaurentPoly<Int> quantum_int(int k) {
  if (k <= 0) return {};
  std::vector<Int> c(static_cast<std::size_t>(2 * k - 1), Int(0));
  for (std::size_t j = 0; j < c.size(); j += 2) c[j] = 1;
  return BasicLaurentPoly<Int>::from_coeffs(1 - k, std::move(c));
}

template <typename Int = BigInt>
BasicLaurentPoly<Int> quantum_factorial(int k) {
  BasicLaurentPoly<Int> out(Int(1));
  for (int j = 2; j <= k; ++j) out *= quantum_int<Int>(j);
  return out;
}

/// The unique bar-invariant m with c - m in qZ[q]:
/// m = c_0 + sum_{d>0} c_{-d} (q^d + q^-d).
template <typename Int>
BasicLaurentPoly<Int> bar_symmetric_part(const BasicLaurentPoly<Int>& c) {
  if (c.in_q_z_q()) return {};
  const int lo = c.min_deg();
  std::vector<Int> out(static_cast<std::size_t>(-2 * lo + 1), Int(0));
  for (int d = lo; d <= 0; ++d) {
    const Int v = c.coeff(d);
    out[static_cast<std::size_t>(d - lo)] = v;
    out[static_cast<std::size_t>(-d - lo)] = v;
  }
  return BasicLaurentPoly<Int>::from_coeffs(lo, std::move(out));
}

/// h with f = g * h. Throws InexactDivision when no Laurent quotient exists.
template <typename Int>
BasicLaurentPoly<Int> exact_div(const BasicLaurentPoly<Int>& f, const BasicLaurentPoly<Int>& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (f.is_zero()) return {};
  const auto& gc = g.coeffs();
  std::vector<Int> rem = f.coeffs();
  if (rem.size() < gc.size()) throw InexactDivision("exact_div: divisor longer than dividend");
  const std::size_t qlen = rem.size() - gc.size() + 1;
  std::vector<Int> quot(qlen, Int(0));
  for (std::size_t j = 0; j < qlen; ++j) {
    if (rem[j] == 0) continue;
    if (rem[j] % gc.front() != 0) throw InexactDivision("exact_div: non-integral quotient coefficient");
    const Int c = rem[j] / gc.front();
    for (std::size_t t = 0; t < gc.size(); ++t) rem[j + t] -= c * gc[t];
    quot[j] = c;
  }
  for (std::size_t j = qlen; j < rem.size(); ++j)
    if (rem[j] != 0) throw InexactDivision("exact_div: nonzero remainder");
  return BasicLaurentPoly<Int>::from_coeffs(f.min_deg() - g.min_deg(), std::move(quot));
}

/// Terms in increasing degree, e.g. "q^-1 + 3 + 2q^2"; zero renders as "0".
template <typename Int>
std::string to_string(const BasicLaurentPoly<Int>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = f.min_deg(); d <= f.max_deg(); ++d) {
    Int c = f.coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (d == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'q';
      if (d != 1) os << '^' << d;
    }
    first = false;
  }
  return os.str();
}

template <typename Int>
std::ostream& operator<<(std::ostream& os, const BasicLaurentPoly<Int>& f) {
  return os << to_string(f);
}

}  // namespace fockcanon
