#include "fockcanon/rootdata.hpp"

#include <stdexcept>

#include "fockcanon/errors.hpp"

namespace fockcanon {

namespace {

template <typename Map>
std::string render(const Map& m, const char* symbol) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [i, k] : m) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k);
    out += symbol;
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

int RootVector::height() const {
  int h = 0;
  for (const auto& [i, k] : mult) h += k;
  return h;
}

int Weight::level() const {
  int l = 0;
  for (const auto& [i, k] : mult) l += k;
  return l;
}

std::string to_string(const RootVector& beta) { return render(beta.mult, "a"); }
std::string to_string(const Weight& w) { return render(w.mult, "L"); }

int cartan(Residue i, Residue j, const Characteristic& e) {
  if (!e.is_finite()) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
  }
  const int a = e.reduce(i);
  const int b = e.reduce(j);
  if (a == b) return 2;
  if (e.value() == 2) return -2;
  if (e.reduce(static_cast<long long>(a) + 1) == b || e.reduce(static_cast<long long>(b) + 1) == a) return -1;
  return 0;
}

Weight weight_from_charge(const Characteristic& e, const Charge& kappa) {
  Weight w;
  for (int k : kappa.kappas) ++w.mult[e.reduce(-static_cast<long long>(k))];
  return w;
}

RootVector beta(const Multipartition& la, const FockContext& ctx) {
  if (la.level() != ctx.level()) throw std::invalid_argument("beta: level does not match charge");
  RootVector b;
  for (const auto& a : diagram(la)) ++b.mult[residue(a, ctx)];
  return b;
}

long long pairing(const Weight& w, const RootVector& beta) {
  long long s = 0;
  for (const auto& [i, k] : w.mult) s += static_cast<long long>(k) * beta[i];
  return s;
}

long long pairing(const RootVector& beta, const RootVector& gamma, const Characteristic& e) {
  long long s = 0;
  for (const auto& [i, a] : beta.mult)
    for (const auto& [j, b] : gamma.mult) s += static_cast<long long>(a) * b * cartan(i, j, e);
  return s;
}

int defect(const RootVector& b, const FockContext& ctx) {
  const long long lin = pairing(weight_from_charge(ctx.e, ctx.charge), b);
  const long long quad = pairing(b, b, ctx.e);
  if (quad % 2 != 0) throw ConsistencyError("defect: (beta,beta) is odd for beta = " + to_string(b));
  const long long d = lin - quad / 2;
  if (d < 0) throw ConsistencyError("defect: negative value for beta = " + to_string(b));
  return static_cast<int>(d);
}

int defect(const Multipartition& la, const FockContext& ctx) { return defect(beta(la, ctx), ctx); }

bool same_block(const Multipartition& la, const Multipartition& mu, const FockContext& ctx) {
  if (la.size() != mu.size()) throw std::invalid_argument("same_block: size mismatch");
  return beta(la, ctx) == beta(mu, ctx);
}

}  // namespace fockcanon
