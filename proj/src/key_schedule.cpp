#include "smdna/key_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smdna/error.hpp"

namespace smdna {

namespace {

void require_angle(double v, const char* name) {
  if (!(v > 0.0 && v < kTwoPi<double>))
    throw KeyError(name, std::string(name) + " must lie in (0, 2pi)");
}

void require_param(double v, const char* name) {
  if (!(v > kMinChaoticParam))
    throw KeyError(name, std::string(name) + " must exceed 18.0");
  if (!std::isfinite(v)) throw KeyError(name, std::string(name) + " must be finite");
}

}  // namespace

void validate_key(const SecretKey& key) {
  require_angle(key.x0, "X0");
  require_angle(key.y0, "Y0");
  require_param(key.k, "K");
  require_param(key.k1, "K1");
  require_param(key.k2, "K2");
  require_param(key.k3, "K3");
  require_param(key.k4, "K4");
  if (key.n <= 0 || key.n >= kMaxSkip)
    throw KeyError("N", "N must satisfy 0 < N < 1000");
}

RuleId region_symbol(const MapState<double>& s) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const int col = std::clamp(static_cast<int>(std::floor(s.x / kHalfPi)), 0, 3);
  const int row = std::clamp(static_cast<int>(std::floor(s.y / std::numbers::pi)), 0, 1);
  return RuleId(col + 4 * row + 1);
}

std::uint8_t quantize_coordinate(double c) {
  const double q = std::floor(c / kTwoPi<double> * 256.0);
  return static_cast<std::uint8_t>(std::clamp(q, 0.0, 255.0));
}

KeySchedule derive_schedule(const SecretKey& key, std::size_t h, std::size_t w) {
  validate_key(key);
  if (h == 0 || w == 0) throw DimensionError("image dimensions must be positive");
  const std::size_t count = h * w;

  KeySchedule ks;
  ks.dotp1.reserve(count);
  ks.dotp2.reserve(count);

  MapState<double> s{key.x0, key.y0};
  const MapParam<double> p{key.k};
  s = iterate_n(s, p, static_cast<std::uint64_t>(key.n));

  for (std::size_t i = 0; i < count; ++i) {
    s = step(s, p);
    ks.dotp1.push_back(quantize_coordinate(s.x));
    ks.dotp2.push_back(quantize_coordinate(s.y));
  }

  auto segment = [&](double k, std::vector<RuleId>& out) {
    out.reserve(count);
    const MapParam<double> pk{k};
    for (std::size_t i = 0; i < count; ++i) {
      s = step(s, pk);
      out.push_back(region_symbol(s));
    }
  };
  segment(key.k1, ks.rsq1);
  segment(key.k2, ks.rsq2);
  segment(key.k3, ks.rsq3);
  segment(key.k4, ks.rsq4);
  return ks;
}

std::vector<RuleId> symbol_stream(const SecretKey& key, std::size_t count) {
  validate_key(key);
  MapState<double> s{key.x0, key.y0};
  s = iterate_n(s, MapParam<double>{key.k}, static_cast<std::uint64_t>(key.n));
  const MapParam<double> p{key.k1};
  std::vector<RuleId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    s = step(s, p);
    out.push_back(region_symbol(s));
  }
  return out;
}

}  // namespace smdna
