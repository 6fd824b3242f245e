#include "chiraltp/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace chiraltp {

namespace {

// log(n!) for n <= kMaxFact, enough for j <= 40 ((3j+1)! = 121!).
constexpr int kMaxFact = 200;

const long double* log_fact_table() {
  static const auto table = [] {
    auto t = new std::array<long double, kMaxFact + 1>{};
    (*t)[0] = 0.0L;
    for (int n = 1; n <= kMaxFact; ++n) {
      (*t)[n] = (*t)[n - 1] + std::log(static_cast<long double>(n));
    }
    return t;
  }();
  return table->data();
}

bool triangle_ok(int j1, int j2, int j3) {
  return j3 >= std::abs(j1 - j2) && j3 <= j1 + j2;
}

}  // namespace

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) {
    throw std::invalid_argument("wigner3j: negative angular momentum");
  }
  if (j1 + j2 + j3 > kMaxFact - 1) {
    throw std::invalid_argument("wigner3j: arguments exceed supported range");
  }
  if (m1 + m2 + m3 != 0) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
  if (!triangle_ok(j1, j2, j3)) return 0.0;

  const long double* lf = log_fact_table();

  const long double log_pref =
      0.5L * (lf[j1 + j2 - j3] + lf[j1 - j2 + j3] + lf[-j1 + j2 + j3] -
              lf[j1 + j2 + j3 + 1] + lf[j1 + m1] + lf[j1 - m1] + lf[j2 + m2] +
              lf[j2 - m2] + lf[j3 + m3] + lf[j3 - m3]);

  const int t_min = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int t_max = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  if (t_max < t_min) return 0.0;

  long double sum = 0.0L;
  for (int t = t_min; t <= t_max; ++t) {
    const long double log_den = lf[t] + lf[j3 - j2 + t + m1] +
                                lf[j3 - j1 + t - m2] + lf[j1 + j2 - j3 - t] +
                                lf[j1 - t - m1] + lf[j2 - t + m2];
    const long double term = std::exp(log_pref - log_den);
    sum += (t % 2 == 0) ? term : -term;
  }

  const int phase = j1 - j2 - m3;
  if (phase % 2 != 0) sum = -sum;
  return static_cast<double>(sum);
}

}  // namespace chiraltp
