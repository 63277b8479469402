#pragma once

// Conservative chaotic standard map on the 2-torus [0, 2pi) x [0, 2pi).
//
//   x' = (x + k sin y) mod 2pi
//   y' = (x' + y)      mod 2pi
//
// Everything here is header-only and templated on the scalar so the same
// code can be instantiated in higher precision for cross-checks. The cipher
// itself always uses double.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace smdna {

template <typename Scalar = double>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// Lower bound (exclusive) on the map parameter for globally chaotic dynamics.
inline constexpr double kMinChaoticParam = 18.0;

/// Euclidean remainder of v by 2pi. Always lands in [0, 2pi); a result that
/// rounds up to exactly 2pi is folded back to 0.
template <typename Scalar>
Scalar wrap_angle(Scalar v) {
  Scalar r = std::fmod(v, kTwoPi<Scalar>);
  if (r < Scalar(0)) r += kTwoPi<Scalar>;
  if (r >= kTwoPi<Scalar>) r = Scalar(0);
  return r;
}

template <typename Scalar = double>
struct MapState {
  Scalar x{};
  Scalar y{};

  bool operator==(const MapState&) const = default;
};

template <typename Scalar = double>
struct MapParam {
  Scalar k{};
};

template <typename Scalar>
bool in_phase_space(const MapState<Scalar>& s) {
  return s.x >= Scalar(0) && s.x < kTwoPi<Scalar> && s.y >= Scalar(0) &&
         s.y < kTwoPi<Scalar>;
}

template <typename Scalar>
bool is_chaotic(const MapParam<Scalar>& p) {
  return p.k > Scalar(kMinChaoticParam);
}

/// One iteration. x' is computed first and then feeds y'.
template <typename Scalar>
MapState<Scalar> step(const MapState<Scalar>& s, const MapParam<Scalar>& p) {
  const Scalar x = wrap_angle<Scalar>(s.x + p.k * std::sin(s.y));
  const Scalar y = wrap_angle<Scalar>(x + s.y);
  return {x, y};
}

template <typename Scalar>
MapState<Scalar> iterate_n(MapState<Scalar> s, const MapParam<Scalar>& p,
                           std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) s = step(s, p);
  return s;
}

}  // namespace smdna
