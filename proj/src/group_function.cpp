#include "aplab/group_function.hpp"

#include <cmath>

namespace aplab {

GroupFunction::GroupFunction(u64 modulus) : n_(modulus), values_(modulus, cplx(0, 0)) {
  require(modulus >= 2, "GroupFunction: modulus must be at least 2");
}

GroupFunction::GroupFunction(u64 modulus, std::vector<cplx> values)
    : n_(modulus), values_(std::move(values)) {
  require(n_ >= 2, "GroupFunction: modulus must be at least 2");
  require(values_.size() == n_, "GroupFunction: value count must equal modulus");
}

GroupFunction GroupFunction::indicator(const ZnSet& a) {
  GroupFunction f(a.modulus());
  for (u32 x : a.elements()) f.values_[x] = cplx(1, 0);
  f.exact_ = true;
  f.denom_ = 1.0;
  return f;
}

GroupFunction GroupFunction::measure(const ZnSet& a) {
  require(!a.empty(), "measure: empty set has no normalized measure");
  GroupFunction f(a.modulus());
  const double v = static_cast<double>(a.modulus()) / static_cast<double>(a.cardinality());
  for (u32 x : a.elements()) f.values_[x] = cplx(v, 0);
  f.exact_ = true;
  f.denom_ = static_cast<double>(a.cardinality());
  return f;
}

GroupFunction GroupFunction::constant(u64 modulus, cplx value) {
  GroupFunction f(modulus);
  for (auto& v : f.values_) v = value;
  return f;
}

void GroupFunction::set_exact(double denom) {
  exact_ = true;
  denom_ = denom;
}

bool GroupFunction::snap_to_exact(double denom) {
  if (denom <= 0 || denom >= 0x1.0p53) {
    clear_exact();
    return false;
  }
  std::vector<cplx> snapped(n_);
  for (u64 x = 0; x < n_; ++x) {
    double re = values_[x].real() * denom;
    double im = values_[x].imag() * denom;
    double rre = std::round(re);
    double rim = std::round(im);
    if (std::abs(re - rre) > 1e-6 || std::abs(im - rim) > 1e-6) {
      clear_exact();
      return false;
    }
    snapped[x] = cplx(rre / denom, rim / denom);
  }
  values_ = std::move(snapped);
  exact_ = true;
  denom_ = denom;
  return true;
}

GroupFunction GroupFunction::translate(u32 x) const {
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) {
    u64 s = u + x;
    if (s >= n_) s -= n_;
    out.values_[u] = values_[s];
  }
  out.exact_ = exact_;
  out.denom_ = denom_;
  return out;
}

GroupFunction GroupFunction::reflect() const {
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) out.values_[u] = values_[u == 0 ? 0 : n_ - u];
  out.exact_ = exact_;
  out.denom_ = denom_;
  return out;
}

GroupFunction GroupFunction::conjugate() const {
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) out.values_[u] = std::conj(values_[u]);
  out.exact_ = exact_;
  out.denom_ = denom_;
  return out;
}

GroupFunction GroupFunction::operator+(const GroupFunction& g) const {
  require(n_ == g.n_, "GroupFunction: modulus mismatch");
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) out.values_[u] = values_[u] + g.values_[u];
  return out;
}

GroupFunction GroupFunction::operator-(const GroupFunction& g) const {
  require(n_ == g.n_, "GroupFunction: modulus mismatch");
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) out.values_[u] = values_[u] - g.values_[u];
  return out;
}

GroupFunction GroupFunction::scaled(cplx s) const {
  GroupFunction out(n_);
  for (u64 u = 0; u < n_; ++u) out.values_[u] = values_[u] * s;
  return out;
}

double GroupFunction::max_abs() const {
  double m = 0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm(const GroupFunction& f, double p) {
  require(p >= 1.0, "lp_norm: p must be at least 1");
  if (std::isinf(p)) return f.max_abs();
  const u64 n = f.modulus();
  double acc = 0;
  if (p == 1.0) {
    for (const auto& v : f.values()) acc += std::abs(v);
    return acc / static_cast<double>(n);
  }
  if (p == 2.0) {
    for (const auto& v : f.values()) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(n));
  }
  for (const auto& v : f.values()) {
    double a = std::abs(v);
    if (a > 0) acc += std::pow(a, p);
  }
  return std::pow(acc / static_cast<double>(n), 1.0 / p);
}

std::complex<double> inner_product(const GroupFunction& f, const GroupFunction& g) {
  require(f.modulus() == g.modulus(), "inner_product: modulus mismatch");
  cplx acc(0, 0);
  for (u64 x = 0; x < f.modulus(); ++x) acc += f[x] * std::conj(g[x]);
  return acc / static_cast<double>(f.modulus());
}

}  // namespace aplab
