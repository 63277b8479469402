#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "smdna/metrics.hpp"

namespace smdna {

struct MetricsReport {
  int height = 0;
  int width = 0;

  HistogramUniformity hist_plain;
  HistogramUniformity hist_cipher;
  DeviationMetrics deviation;
  DnaSequenceMetrics dna;
  double fpr = 0.0;
  CorrelationMetrics correlation;
  EntropyMetrics entropy_plain;
  EntropyMetrics entropy_cipher;
  PerceptualMetrics perceptual;

  // Campaigns; only present when requested.
  std::optional<DiffMetrics> differential;
  int differential_trials = 0;
  std::vector<KeySensitivityRow> key_sensitivity;
};

struct AnalyzeOptions {
  std::vector<int> blocks{25, 40, 50};
  int trials = 10;             // 0 disables the differential campaign
  bool key_sensitivity = true;
  std::uint64_t seed = 1;
};

/// Every metric for one plain/cipher pair encrypted under `key`.
MetricsReport analyze(const Image& plain, const Image& cipher, const SecretKey& key,
                      const AnalyzeOptions& options = {});

nlohmann::json to_json(const MetricsReport& report);

/// Human-readable tables, one block per metric family.
std::string render_text(const MetricsReport& report);

}  // namespace smdna
