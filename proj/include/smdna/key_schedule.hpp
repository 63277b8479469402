#pragma once

// Secret key and the per-pixel schedule derived from it.
//
// One continuous standard-map trajectory is cut into six stretches:
//   n burn-in iterates (parameter k, discarded),
//   h*w iterates with k  -> one-time-pad bytes dotp1 (from x), dotp2 (from y),
//   h*w iterates with k1 -> rsq1, ... , h*w iterates with k4 -> rsq4.
// Each stretch starts from the exact state where the previous one ended.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "smdna/chaos.hpp"
#include "smdna/dna.hpp"

namespace smdna {

struct SecretKey {
  double x0 = 0.0;
  double y0 = 0.0;
  double k = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
  double k4 = 0.0;
  int n = 0;

  bool operator==(const SecretKey&) const = default;
};

inline constexpr int kMaxSkip = 1000;  // exclusive

/// Throws KeyError naming the first offending field.
void validate_key(const SecretKey& key);

struct KeySchedule {
  std::vector<std::uint8_t> dotp1;
  std::vector<std::uint8_t> dotp2;
  std::vector<RuleId> rsq1;
  std::vector<RuleId> rsq2;
  std::vector<RuleId> rsq3;
  std::vector<RuleId> rsq4;

  std::size_t size() const noexcept { return dotp1.size(); }
};

/// Phase-space cell 1..8: four columns of width pi/2 in x, two rows of
/// height pi in y, numbered in raster order from the origin.
RuleId region_symbol(const MapState<double>& s);

/// floor(c / 2pi * 256), clamped to 255.
std::uint8_t quantize_coordinate(double c);

KeySchedule derive_schedule(const SecretKey& key, std::size_t h, std::size_t w);

/// `count` region symbols from a trajectory burned in for n iterates with
/// parameter k and then continued with parameter k1. Used by the randomness
/// harness to exercise the symbol generator in isolation.
std::vector<RuleId> symbol_stream(const SecretKey& key, std::size_t count);

/// x0, y0 uniform in (0, 2pi); k..k4 uniform in (18, 100]; n uniform in 1..999.
template <typename URBG>
SecretKey generate_key(URBG& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi<double>);
  std::uniform_real_distribution<double> offset(0.0, 100.0 - kMinChaoticParam);
  std::uniform_int_distribution<int> skip(1, kMaxSkip - 1);

  auto draw_angle = [&] {
    double v = 0.0;
    while (v <= 0.0) v = angle(rng);
    return v;
  };
  auto draw_param = [&] { return 100.0 - offset(rng); };

  SecretKey key;
  key.x0 = draw_angle();
  key.y0 = draw_angle();
  key.k = draw_param();
  key.k1 = draw_param();
  key.k2 = draw_param();
  key.k3 = draw_param();
  key.k4 = draw_param();
  key.n = skip(rng);
  return key;
}

}  // namespace smdna
