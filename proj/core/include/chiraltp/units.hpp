#pragma once

namespace chiraltp {

// All energies are carried as frequencies nu in plain MHz (E = h * nu).
// Time-domain propagation uses the phase 2*pi*nu*t with t in microseconds.

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// CODATA values used to pin the Stark conversion constant.
inline constexpr double kDebyeInCm = 3.33564e-30;      // C m per Debye
inline constexpr double kPlanckInJs = 6.62607015e-34;  // J s

// Frequency equivalent of (1 Debye)*(1 kV/cm): nu = d*E/h, in MHz.
// 3.33564e-30 C m * 1e5 V/m / 6.62607015e-34 J s = 503.41 MHz.
inline constexpr double kStarkMHzPerDebyeKVcm =
    kDebyeInCm * 1.0e5 / kPlanckInJs / 1.0e6;

}  // namespace chiraltp
