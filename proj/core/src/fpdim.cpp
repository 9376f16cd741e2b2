#include "fusion/fpdim.hpp"

#include <algorithm>
#include <cmath>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

constexpr int kMaxSweeps = 10000;
constexpr double kBracketTarget = 1e-12;

}  // namespace

double fpdim_object(const FusionRing& r, int i) {
  IntMatrix m = mult_matrix(r, i);
  const int n = r.rank;

  // Power iteration on M + I.  The shift makes every class aperiodic, so the
  // Collatz-Wielandt bracket min_k (Ax)_k/x_k <= perron(A) <= max_k (Ax)_k/x_k
  // tightens to the eigenvalue; the bracket is a certified enclosure at every
  // step.  x stays strictly positive because the diagonal is >= 1.
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = 0.0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (int k = 0; k < n; ++k) {
      double acc = x[k];
      const int* row = &m.a[static_cast<std::size_t>(k) * n];
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      y[k] = acc;
    }
    lo = y[0] / x[0];
    hi = lo;
    for (int k = 1; k < n; ++k) {
      double ratio = y[k] / x[k];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo < kBracketTarget) break;
    double norm = 0.0;
    for (int k = 0; k < n; ++k) norm = std::max(norm, y[k]);
    for (int k = 0; k < n; ++k) x[k] = y[k] / norm;
  }
  if (hi - lo >= kEps)
    throw error("power iteration did not converge; multiplication matrix " + std::to_string(i) +
                " looks malformed");
  return (lo + hi) / 2.0 - 1.0;
}

std::vector<double> fpdims(const FusionRing& r) {
  std::vector<double> d(r.rank);
  for (int i = 0; i < r.rank; ++i) d[i] = fpdim_object(r, i);
  return d;
}

double fpdim_ring(const FusionRing& r) {
  double total = 0.0;
  for (double d : fpdims(r)) total += d * d;
  return total;
}

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) < tol; }

long long nearest_integer(double x) { return std::llround(x); }

}  // namespace fusion
