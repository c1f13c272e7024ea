// quadrature.hpp
#pragma once

#include <functional>

namespace casimir::quad {

struct Result {
  double value = 0.0;           // adaptive estimate
  double error_estimate = 0.0;  // from the adaptive scheme
  double fixed_value = 0.0;     // composite Simpson on kFixedPoints nodes
};

inline constexpr int kFixedPoints = 1025;
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kRelTol = 1e-10;

/// Adaptive Gauss-Kronrod on [a, b] to max(kAbsTol, kRelTol*|I|), checked
/// against a fixed 1025-point composite Simpson rule. Throws
/// ConsistencyError if the two disagree by more than 1e-8 relative and
/// ConvergenceError if the adaptive estimate misses its tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b);

/// Composite Simpson with `points` nodes (odd, >= 3).
double simpson(const std::function<double(double)>& f, double a, double b, int points);

}  // namespace casimir::quad
