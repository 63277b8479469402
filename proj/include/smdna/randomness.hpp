#pragma once

// Desk-scale statistical testing of the region-symbol generator: three
// SP 800-22 tests (frequency, block frequency, runs), the pass-proportion
// band and the second-level chi-square uniformity check on p-values.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "smdna/dna.hpp"

namespace smdna {

class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::vector<std::uint8_t> bits);
  /// From a string of '0'/'1' characters; whitespace is skipped.
  static BitSequence from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  void truncate(std::size_t n) { if (n < bits_.size()) bits_.resize(n); }

 private:
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kMinTestBits = 100;
inline constexpr std::size_t kMinUniformitySamples = 55;
inline constexpr double kSignificance = 0.01;
inline constexpr double kUniformityThreshold = 0.0001;

/// Each symbol s contributes the 3-bit big-endian encoding of s - 1.
BitSequence symbols_to_bits(std::span<const RuleId> symbols);

// Individual statistics. They accept any non-empty input so the short
// worked examples of SP 800-22 can be checked directly.
double monobit_test(const BitSequence& seq);
double block_frequency_test(const BitSequence& seq, std::size_t block = 128);
/// Returns 0 when the frequency prerequisite |pi - 1/2| >= 2/sqrt(n) fails.
double runs_test(const BitSequence& seq);

/// p-values keyed "monobit", "block_frequency", "runs". Needs >= 100 bits.
/// Block frequency uses 128-bit blocks, or one block for shorter input.
std::map<std::string, double> run_statistical_tests(const BitSequence& seq);

/// Chi-square (9 dof) p-value of the p-values binned into 10 equal bins.
double pvalue_uniformity(std::span<const double> pvalues);

struct ProportionBand {
  double lo = 0.0;
  double hi = 1.0;
};

/// p_hat -/+ 3 sqrt(p_hat (1 - p_hat) / count), clamped to [0, 1].
ProportionBand proportion_band(std::size_t count, double p_hat = 1.0 - kSignificance);

struct TestAssessment {
  std::string name;
  std::size_t passed = 0;
  double proportion = 0.0;
  double p_value_t = 0.0;
  bool proportion_ok = false;
  bool uniformity_ok = false;
};

struct BatchAssessment {
  std::size_t count = 0;
  std::size_t bit_length = 0;
  ProportionBand band;
  std::vector<TestAssessment> tests;

  bool passed() const;
};

/// Aggregates per-sequence p-values (one map per sequence, as returned by
/// run_statistical_tests).
BatchAssessment assess(const std::vector<std::map<std::string, double>>& results,
                       std::size_t bit_length);

/// Runs `count` sequences of `bit_length` bits, each from a freshly drawn key.
BatchAssessment batch_assess(std::size_t count, std::size_t bit_length, std::uint64_t seed);

nlohmann::json to_json(const BatchAssessment& batch);

}  // namespace smdna
