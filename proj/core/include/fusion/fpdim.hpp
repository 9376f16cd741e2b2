#pragma once

#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

inline constexpr double kEps = 1e-9;         // floating-point comparisons
inline constexpr double kIntegerTol = 1e-6;  // integrality detection

// Perron eigenvalue of mult_matrix(r, i), i.e. the Frobenius-Perron
// dimension of x_i.  Power iteration from the all-ones vector on the
// shifted matrix M + I (the shift kills period-2 spectra); stops once the
// Collatz-Wielandt bracket certifies the value, capped at 10000 sweeps.
double fpdim_object(const FusionRing& r, int i);

std::vector<double> fpdims(const FusionRing& r);

// sum_i fpdim(x_i)^2
double fpdim_ring(const FusionRing& r);

bool near_integer(double x, double tol = kIntegerTol);
long long nearest_integer(double x);

}  // namespace fusion
