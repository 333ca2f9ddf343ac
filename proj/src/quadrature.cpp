#include "varrest/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "varrest/core.hpp"

namespace varrest {

static GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[k] = -x;
    rule.nodes[n - 1 - k] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[k] = w;
    rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 4096) throw std::invalid_argument("gauss_legendre: order out of range");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_on(int n, double a, double b) {
  const auto& rule = gauss_legendre(n);
  std::vector<double> xs(n), ws(n);
  const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    xs[i] = mid + halfw * rule.nodes[i];
    ws[i] = halfw * rule.weights[i];
  }
  return {std::move(xs), std::move(ws)};
}

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  std::size_t evals = 0;
  std::size_t max_evals = 0;

  double eval(double x) {
    ++evals;
    return (*f)(x);
  }
};

double simpson_recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = st.eval(lm), frm = st.eval(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || st.evals >= st.max_evals || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, std::size_t max_evals) {
  if (!(a <= b)) throw std::invalid_argument("adaptive_simpson: requires a <= b");
  if (a == b) return 0.0;
  SimpsonState st{&f, 0, max_evals};
  // Seed with a few panels so oscillatory integrands are not judged from a
  // single coarse estimate.
  const int panels = 8;
  const double h = (b - a) / panels;
  double total = 0.0;
  double x0 = a, f0 = st.eval(a);
  for (int p = 0; p < panels; ++p) {
    const double x1 = (p == panels - 1) ? b : a + (p + 1) * h;
    const double fm = st.eval(0.5 * (x0 + x1));
    const double f1 = st.eval(x1);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += simpson_recurse(st, x0, x1, f0, fm, f1, whole, tol / panels, 48);
    x0 = x1;
    f0 = f1;
  }
  return total;
}

}  // namespace varrest
