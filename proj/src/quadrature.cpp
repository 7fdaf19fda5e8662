#include "spinphase/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "spinphase/error.hpp"

namespace spinphase {
namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

constexpr int kMinDepth = 4;  // guards against accidental agreement on coarse panels
constexpr int kMaxDepth = 60;

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::size_t max_intervals) {
  if (!(tol > 0.0)) throw InvalidArgument("adaptive_simpson: tol must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("adaptive_simpson: bounds must be finite");
  }
  QuadratureResult result;
  if (a == b) return result;

  auto simpson = [](double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  };

  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  std::vector<Panel> stack;
  stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0});

  // Panels are processed depth-first, left to right.
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm), frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm)) {
      throw NumericalFailure("adaptive_simpson: integrand not finite near x = " +
                             std::to_string(m));
    }
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;

    if ((std::abs(delta) <= 15.0 * p.tol && p.depth >= kMinDepth) || p.depth >= kMaxDepth) {
      if (p.depth >= kMaxDepth && std::abs(delta) > 15.0 * p.tol) {
        throw NumericalFailure("adaptive_simpson: recursion depth exhausted near x = " +
                               std::to_string(m));
      }
      result.value += left + right + delta / 15.0;
      result.error_estimate += std::abs(delta) / 15.0;
      ++result.intervals;
      continue;
    }
    if (result.intervals + stack.size() + 2 > max_intervals) {
      throw NumericalFailure("adaptive_simpson: exceeded " + std::to_string(max_intervals) +
                             " subintervals at requested tolerance");
    }
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  return result;
}

}  // namespace spinphase
