// constants.hpp
#pragma once

#include <numbers>

namespace casimir::constants {

inline constexpr double pi = std::numbers::pi;

// Riemann zeta values, 30 significant digits.
inline constexpr double zeta3 = 1.20205690315959428539973816151;
inline constexpr double zeta4 = 1.08232323371113819151600369654;  // pi^4/90

// Informational only; every computation is in natural units.
inline constexpr double hbar_c_eV_m = 1.973269804e-7;
inline constexpr double k_B_eV_per_K = 8.617333262e-5;

}  // namespace casimir::constants
