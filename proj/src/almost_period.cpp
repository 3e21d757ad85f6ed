#include "aplab/almost_period.hpp"

#include <algorithm>
#include <cmath>

#include "aplab/ntt.hpp"

namespace aplab {

double cap_exponent(double p, u64 n) {
  return std::min(p, 2.0 + std::log(static_cast<double>(n)));
}

namespace {

// ||g - tau_y g||_p over the whole group, direct evaluation.
double translate_defect(const GroupFunction& g, u64 y, double p) {
  const u64 n = g.modulus();
  double acc = 0;
  if (p == 2.0) {
    for (u64 u = 0; u < n; ++u) {
      u64 v = u + y;
      if (v >= n) v -= n;
      acc += std::norm(g[u] - g[v]);
    }
    return std::sqrt(acc / static_cast<double>(n));
  }
  for (u64 u = 0; u < n; ++u) {
    u64 v = u + y;
    if (v >= n) v -= n;
    double a = std::abs(g[u] - g[v]);
    if (a > 0) acc += std::pow(a, p);
  }
  return std::pow(acc / static_cast<double>(n), 1.0 / p);
}

}  // namespace

ZnSet almost_period_set(const GroupFunction& f, const ZnSet& s, const ZnSet& t, double p,
                        double eps) {
  require(f.modulus() == s.modulus() && s.modulus() == t.modulus(),
          "almost_period_set: modulus mismatch");
  require(!s.empty(), "almost_period_set: S must be nonempty");
  require(!t.empty(), "almost_period_set: T must be nonempty");
  require(p >= 2.0, "almost_period_set: p must be at least 2");
  require(eps > 0.0 && eps < 1.0, "almost_period_set: eps must lie in (0,1)");

  const u64 n = f.modulus();
  const double pe = cap_exponent(p, n);
  GroupFunction g = convolve(f, GroupFunction::measure(s));
  const double bound = eps * lp_norm(f, pe);
  const double slack = 1e-12 * (1.0 + bound);

  ZnSet window = difference_set(t);
  ZnSet out(n);
  // defect(y) == defect(N-y) exactly; computing one side and mirroring keeps
  // the output symmetric bit for bit
  for (u64 y = 0; y <= n / 2; ++y) {
    if (!window.contains(static_cast<u32>(y)) &&
        !window.contains(static_cast<u32>(y == 0 ? 0 : n - y))) {
      continue;
    }
    double d = translate_defect(g, y, pe);
    if (d <= bound + slack) {
      u32 mirror = static_cast<u32>(y == 0 ? 0 : n - y);
      if (window.contains(static_cast<u32>(y))) out.insert(static_cast<u32>(y));
      if (window.contains(mirror)) out.insert(mirror);
    }
  }
  return out;
}

GroupFunction smoothing_operator(const ZnSet& x, u32 l) {
  require(!x.empty(), "smoothing_operator: X must be nonempty");
  require(l >= 1, "smoothing_operator: l must be at least 1");
  const u64 n = x.modulus();
  const double card = static_cast<double>(x.cardinality());
  // counts of signed 2l-fold sums stay exact while |X|^(2l) is in CRT range
  const double bits = 2.0 * l * std::log2(card);
  if (bits < 120.0) {
    std::vector<u64> ix(n, 0), ixn(n, 0);
    for (u32 e : x.elements()) ix[e] = 1;
    for (u32 e : x.negate().elements()) ixn[e] = 1;
    std::vector<u64> cnt = cyclic_convolve_counts(ix, ixn);
    std::vector<u64> acc = cnt;
    for (u32 i = 1; i < l; ++i) acc = cyclic_convolve_counts(acc, cnt);
    const double denom = std::pow(card, 2.0 * l);
    GroupFunction out(n);
    for (u64 w = 0; w < n; ++w) {
      out.at(w) = cplx(static_cast<double>(n) * static_cast<double>(acc[w]) / denom, 0);
    }
    if (denom < 0x1.0p53) out.set_exact(denom / static_cast<double>(n));
    return out;
  }
  GroupFunction lam = convolve(GroupFunction::measure(x), GroupFunction::measure(x.negate()));
  GroupFunction out = power_convolve(lam, l);
  // clip float dust so the result stays a probability function
  for (u64 w = 0; w < n; ++w) {
    cplx v = out[w];
    out.at(w) = cplx(v.real() < 0 && v.real() > -1e-9 ? 0.0 : v.real(), 0.0);
  }
  return out;
}

double smoothing_defect(const GroupFunction& f, const ZnSet& s, const ZnSet& x, u32 l,
                        double p) {
  require(f.modulus() == s.modulus() && s.modulus() == x.modulus(),
          "smoothing_defect: modulus mismatch");
  require(!s.empty() && !x.empty(), "smoothing_defect: empty set");
  const double pe = cap_exponent(p, f.modulus());
  GroupFunction g = convolve(f, GroupFunction::measure(s));
  GroupFunction h = convolve(g, smoothing_operator(x, l));
  return lp_norm(g - h, pe);
}

ClsAlmostPeriods cls_bohr_almost_periods(const ZnSet& a1, const ZnSet& a2, double p,
                                         double theta, const Policy& policy) {
  require(a1.modulus() == a2.modulus(), "cls_bohr_almost_periods: modulus mismatch");
  require(!a1.empty() && !a2.empty(), "cls_bohr_almost_periods: empty input set");
  require(p >= 2.0, "cls_bohr_almost_periods: p must be at least 2");
  require(theta > 0.0 && theta < 1.0, "cls_bohr_almost_periods: theta must lie in (0,1)");

  const u64 n = a1.modulus();
  const double pe = cap_exponent(p, n);
  const double alpha1 = a1.density().to_double();
  const double bound = theta * std::pow(alpha1, 1.0 / pe);
  GroupFunction g = convolve(GroupFunction::indicator(a1), GroupFunction::measure(a2));

  Spectrum spec = spectrum(GroupFunction::measure(a2), theta / 4.0);
  std::vector<u32> gamma = spec.frequencies();

  double delta = 2.0;
  u32 bad_x = 0;
  for (int halvings = 0; halvings <= policy.cls_max_halvings; ++halvings) {
    BohrSet b = BohrSet::make(n, gamma, delta, policy);
    // members most likely to fail first are those with the largest chord
    std::vector<u32> order = b.members().elements();
    std::sort(order.begin(), order.end(), [&](u32 lhs, u32 rhs) {
      double cl = b.chord(lhs), cr = b.chord(rhs);
      if (cl != cr) return cl > cr;
      return lhs < rhs;
    });
    bool ok = true;
    for (u32 xm : order) {
      if (xm == 0) continue;
      if (translate_defect(g, xm, pe) > bound + 1e-12 * (1.0 + bound)) {
        ok = false;
        bad_x = xm;
        break;
      }
    }
    if (ok) {
      return ClsAlmostPeriods{std::move(b), pe, theta, bound, halvings};
    }
    delta *= 0.5;
  }
  throw ClsFailure("cls_bohr_almost_periods: verification still fails at x=" +
                   std::to_string(bad_x) + " after " +
                   std::to_string(policy.cls_max_halvings) + " halvings");
}

}  // namespace aplab
