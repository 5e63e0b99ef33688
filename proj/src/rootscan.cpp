#include "fixpoint/rootscan.hpp"

#include <cmath>

namespace fixpoint::detail {

double bisect(const std::function<double(double)>& h, double a, double b) {
  double ha = h(a);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // interval exhausted at double precision
    const double hm = h(mid);
    if (hm == 0.0) return mid;
    if ((ha < 0.0) == (hm < 0.0)) {
      a = mid;
      ha = hm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> scan_scalar_zeros(const std::function<double(double)>& h,
                                      const std::vector<double>& xs,
                                      double accept_tol) {
  std::vector<double> out;
  if (xs.empty()) return out;
  double prev_x = xs.front();
  double prev_h = h(prev_x);
  if (std::fabs(prev_h) <= accept_tol) out.push_back(prev_x);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double x = xs[i];
    const double hx = h(x);
    if (prev_h != 0.0 && hx != 0.0 && (prev_h < 0.0) != (hx < 0.0)) {
      out.push_back(bisect(h, prev_x, x));
    }
    if (std::fabs(hx) <= accept_tol) out.push_back(x);
    prev_x = x;
    prev_h = hx;
  }
  return out;
}

}  // namespace fixpoint::detail
