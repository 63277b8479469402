#pragma once

// Security metrics for plain/cipher image pairs: histogram uniformity and
// deviation, DNA-sequence distance and base ratios, fixed points, adjacent
// and 2D correlation, global/local entropy, perceptual dissimilarity and
// the differential / key-sensitivity campaigns.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "smdna/image.hpp"
#include "smdna/key_schedule.hpp"

namespace smdna {

using Histogram = Eigen::Array<std::int64_t, 256, 1>;

Histogram histogram(const Image& img);

/// Expected per-level count of a perfectly uniform histogram, (H*W)/256.
inline double uniform_level_count(const Image& img) {
  return static_cast<double>(pixel_count(img)) / 256.0;
}

// ---------------------------------------------------------------------------
// Generic statistics on Eigen expressions.

/// Pearson correlation of two equally shaped arrays, population moments.
/// Empty when either side has zero variance.
template <typename DerivedA, typename DerivedB>
std::optional<typename DerivedA::Scalar> pearson(const Eigen::ArrayBase<DerivedA>& a,
                                                 const Eigen::ArrayBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Scalar n = static_cast<Scalar>(a.size());
  const auto da = (a - a.sum() / n).eval();
  const auto db = (b - b.sum() / n).eval();
  const Scalar var_a = da.square().sum() / n;
  const Scalar var_b = db.square().sum() / n;
  if (var_a == Scalar(0) || var_b == Scalar(0)) return std::nullopt;
  return (da * db).sum() / n / std::sqrt(var_a * var_b);
}

/// Shannon entropy in bits of the value distribution described by counts.
template <typename Derived>
double shannon_entropy(const Eigen::ArrayBase<Derived>& counts) {
  const double total = static_cast<double>(counts.sum());
  double h = 0.0;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    if (counts(i) == 0) continue;
    const double p = static_cast<double>(counts(i)) / total;
    h -= p * std::log2(p);
  }
  return h;
}

/// n x n DFT matrix, W(j, k) = exp(-2 pi i j k / n).
Eigen::MatrixXcd dft_matrix(Eigen::Index n);

/// |F(u, v)| of the exact, unpadded 2D DFT (row-column decomposition).
Eigen::ArrayXXd magnitude_spectrum(const Image& img);

// ---------------------------------------------------------------------------
// Histogram.

struct HistogramUniformity {
  double chi2 = 0.0;
  double hist_var = 0.0;
};

HistogramUniformity histogram_uniformity(const Image& img);

struct DeviationMetrics {
  double di = 0.0;
  double md = 0.0;
  double id = 0.0;
  std::array<double, 256> d{};  // |hist_plain - hist_cipher| per level
  double mean_d = 0.0;
};

DeviationMetrics deviation_metrics(const Image& plain, const Image& cipher);

// ---------------------------------------------------------------------------
// DNA sequences.

struct BaseRatio {
  double a = 0.0, t = 0.0, c = 0.0, g = 0.0;  // percent
};

struct DnaSequenceMetrics {
  std::int64_t hd = 0;
  BaseRatio br_plain;
  BaseRatio br_cipher;
};

/// Plain pixels are DNA-encoded under rsq2 and cipher pixels under rsq4,
/// i.e. the sequences the cipher works on.
DnaSequenceMetrics dna_sequence_metrics(const Image& plain, const Image& cipher,
                                        const KeySchedule& schedule);

/// Number of differing base positions.
std::int64_t hamming_distance(const std::vector<DnaQuad>& a, const std::vector<DnaQuad>& b);
BaseRatio base_ratio(const std::vector<DnaQuad>& seq);

// ---------------------------------------------------------------------------
// Pixel-level comparisons.

double fixed_point_ratio(const Image& plain, const Image& cipher);

struct AdjacentCorrelation {
  std::optional<double> horizontal;
  std::optional<double> vertical;
};

AdjacentCorrelation adjacent_correlation(const Image& img);

struct CorrelationMetrics {
  AdjacentCorrelation plain;
  AdjacentCorrelation cipher;
  std::optional<double> corr_2d;
};

CorrelationMetrics correlation_metrics(const Image& plain, const Image& cipher);

double global_entropy(const Image& img);

/// Mean entropy over the non-overlapping block x block tiles. Throws
/// DimensionError when block does not divide both dimensions.
double local_entropy(const Image& img, int block);

struct EntropyMetrics {
  double global = 0.0;
  std::map<int, double> local;
};

EntropyMetrics entropy_metrics(const Image& img, const std::vector<int>& blocks);

struct PerceptualMetrics {
  double mae = 0.0;
  double mse = 0.0;
  double psnr = 0.0;  // +inf when mse == 0
  double sd = 0.0;
  double ssim = 0.0;
};

inline constexpr double kSsimC1 = (0.01 * 255.0) * (0.01 * 255.0);
inline constexpr double kSsimC2 = (0.03 * 255.0) * (0.03 * 255.0);

double ssim_global(const Image& a, const Image& b);
double spectral_distortion(const Image& a, const Image& b);
PerceptualMetrics perceptual_metrics(const Image& plain, const Image& cipher);

struct DiffMetrics {
  double npcr = 0.0;
  double uaci = 0.0;
};

DiffMetrics diff_metrics(const Image& c1, const Image& c2);

// ---------------------------------------------------------------------------
// Campaigns.

struct PlaintextSensitivityOptions {
  int trials = 10;
  int delta = 1;             // intensity step applied mod 256; 0 yields identical pairs
  bool fresh_keys = true;    // draw a new key for every trial after the first
  std::uint64_t seed = 1;
};

/// Averaged NPCR/UACI between ciphertexts of plain images differing in one
/// uniformly chosen pixel.
DiffMetrics plaintext_sensitivity(const SecretKey& key, const Image& plain,
                                  const PlaintextSensitivityOptions& options = {});

enum class KeyComponent { X0, Y0, K, N, K1, K2, K3, K4 };

inline constexpr std::array<KeyComponent, 8> kKeyComponents{
    KeyComponent::X0, KeyComponent::Y0, KeyComponent::K,  KeyComponent::N,
    KeyComponent::K1, KeyComponent::K2, KeyComponent::K3, KeyComponent::K4};

std::string to_string(KeyComponent c);

/// Key with one component nudged by `delta` (floats) or by `skip_delta`
/// (the integer N). The direction flips when the nudge would leave the
/// valid range.
SecretKey perturb_key(const SecretKey& key, KeyComponent c, double delta = 1e-14,
                      int skip_delta = 1);

struct KeySensitivityRow {
  KeyComponent component = KeyComponent::X0;
  double ks1 = 0.0;  // percent of differing cipher pixels
  double ks2 = 0.0;  // mean normalised intensity change, percent
  double mae = 0.0;  // wrong-key decryption vs plain
  double mse = 0.0;
  double psnr = 0.0;
};

std::vector<KeySensitivityRow> key_sensitivity_suite(const SecretKey& key, const Image& plain,
                                                     double delta = 1e-14, int skip_delta = 1);

}  // namespace smdna
