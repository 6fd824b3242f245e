#pragma once

namespace chiraltp {

// Wigner 3-j symbol for integer angular momenta.
//
// Returns exactly 0 when a selection rule fails (m1+m2+m3 != 0, triangle
// inequality violated, or |m_i| > j_i). Negative j is a contract violation
// and throws std::invalid_argument. Evaluated by the Racah sum with a
// long-double log-factorial table; relative error stays below 1e-12 for
// j <= 40. Pure function, safe for concurrent use.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

}  // namespace chiraltp
