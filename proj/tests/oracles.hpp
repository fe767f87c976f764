#pragma once

// Reference computations written independently of the library: plain series,
// explicit trigonometry and long double accumulation.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

using ld = long double;

inline constexpr ld kPi = std::numbers::pi_v<long double>;
inline constexpr ld kGamma = 0.577215664901532860606512090082402431L;

// psi(z) = -gamma - 1/z + sum_{k>=1} z / (k (k + z)); the tail past N is
// closed with Euler-Maclaurin on f(k) = 1/k - 1/(k+z).
inline ld digamma(ld z, long n_terms = 1000000) {
  ld acc = 0.0L;
  for (long k = n_terms; k >= 1; --k) {
    const ld kk = static_cast<ld>(k);
    acc += z / (kk * (kk + z));
  }
  const ld N = static_cast<ld>(n_terms);
  const ld integral = std::log((N + z) / N);
  const ld fN = 1.0L / N - 1.0L / (N + z);
  const ld d1 = -1.0L / (N * N) + 1.0L / ((N + z) * (N + z));
  const ld d3 = -6.0L / (N * N * N * N) + 6.0L / std::pow(N + z, 4);
  const ld tail = integral - fN / 2.0L - d1 / 12.0L + d3 / 720.0L;
  return -kGamma - 1.0L / z + acc + tail;
}

// psi1(z) = sum_{k>=0} 1/(k+z)^2, same tail treatment.
inline ld trigamma(ld z, long n_terms = 1000000) {
  ld acc = 0.0L;
  for (long k = n_terms - 1; k >= 0; --k) {
    const ld t = static_cast<ld>(k) + z;
    acc += 1.0L / (t * t);
  }
  const ld x = static_cast<ld>(n_terms) + z;
  const ld tail = 1.0L / x + 1.0L / (2.0L * x * x) + 1.0L / (6.0L * x * x * x) -
                  1.0L / (30.0L * std::pow(x, 5));
  return acc + tail;
}

struct P2 {
  ld x, y;
};

// Layout: receiver arm N along +y, S along -y, E/W at +-alpha from N, stop
// lines at D/2 from the centre.
inline P2 place(int arm, ld pos, ld D, ld alpha_deg) {
  const ld a = alpha_deg * kPi / 180.0L;
  const ld r = D / 2.0L + pos;
  switch (arm) {
    case 0: return {0.0L, r};
    case 1: return {0.0L, -r};
    case 2: return {r * std::sin(a), r * std::cos(a)};
    default: return {-r * std::sin(a), r * std::cos(a)};
  }
}

inline ld dist_sq(P2 a, P2 b) {
  const ld dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Angle between two arms measured at the centre, in degrees.
inline ld arm_angle(int a, int b, ld alpha_deg) {
  if (a == b) return 0.0L;
  const bool ns = (a < 2) && (b < 2);
  const bool ew = (a >= 2) && (b >= 2);
  if (ns) return 180.0L;
  if (ew) return 2.0L * alpha_deg;
  const int straight = a < 2 ? a : b;  // the N or S member
  return straight == 0 ? alpha_deg : 180.0L - alpha_deg;
}

// Per-vehicle squared distance as written for the closed forms: same arm
// |dp|^2, opposing arms D^2 + (D + p + p_r)^2, otherwise the law of cosines on
// legs D/2 + p.
inline ld closed_form_dist_sq(int rx_arm, ld rx_pos, int arm, ld pos, ld D, ld alpha_deg) {
  if (arm == rx_arm) return (pos - rx_pos) * (pos - rx_pos);
  const bool opposing = (rx_arm < 2) == (arm < 2);
  if (opposing) {
    const ld far = D + pos + rx_pos;
    return D * D + far * far;
  }
  const ld c = std::cos(arm_angle(rx_arm, arm, alpha_deg) * kPi / 180.0L);
  const ld r1 = D / 2.0L + rx_pos, r2 = D / 2.0L + pos;
  return r1 * r1 + r2 * r2 - 2.0L * r1 * r2 * c;
}

// Brute-force interference sum over explicit positions, per arm N,S,E,W.
inline std::array<ld, 4> brute_force(const std::array<std::vector<double>, 4>& positions,
                                     int rx_arm, int rx_index, ld D, ld alpha_deg, bool closed_form) {
  std::array<ld, 4> out{};
  const ld rx_pos = positions[static_cast<std::size_t>(rx_arm)][static_cast<std::size_t>(rx_index)];
  const P2 rx = place(rx_arm, rx_pos, D, alpha_deg);
  for (int arm = 0; arm < 4; ++arm) {
    const auto& p = positions[static_cast<std::size_t>(arm)];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (arm == rx_arm && static_cast<int>(k) == rx_index) continue;
      const ld d2 = closed_form ? closed_form_dist_sq(rx_arm, rx_pos, arm, p[k], D, alpha_deg)
                          : dist_sq(rx, place(arm, p[k], D, alpha_deg));
      out[static_cast<std::size_t>(arm)] += 1.0L / d2;
    }
  }
  return out;
}

// Term-by-term finite sums with the closed-form summands, accumulated in
// long double: north j=1..nN-1, south j=0..nS-1 over D^2 + (D+jh)^2, cross
// arms a stop-line term 1/(2 D^2 (1-cos a)) plus ((jh)^2 + jhD(1-cos a))^-1.
inline std::array<ld, 4> finite_sums(ld h, ld D, ld alpha_deg, std::array<long, 4> n) {
  const ld omc = 1.0L - std::cos(alpha_deg * kPi / 180.0L);
  std::array<ld, 4> out{};
  for (long j = 1; j < n[0]; ++j) out[0] += 1.0L / ((j * h) * (j * h));
  for (long j = 0; j < n[1]; ++j) out[1] += 1.0L / (D * D + (D + j * h) * (D + j * h));
  for (int arm = 2; arm < 4; ++arm) {
    const long m = n[static_cast<std::size_t>(arm)];
    if (m < 1) continue;
    ld acc = 1.0L / (2.0L * D * D * omc);
    for (long j = 1; j < m; ++j) acc += 1.0L / ((j * h) * (j * h) + j * h * D * omc);
    out[static_cast<std::size_t>(arm)] = acc;
  }
  return out;
}

inline ld rel(ld a, ld b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace oracle
