#include "smdna/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "smdna/cipher.hpp"
#include "smdna/dna.hpp"
#include "smdna/error.hpp"

namespace smdna {

namespace {

Eigen::ArrayXXd as_real(const Image& img) { return img.cast<double>().array(); }

std::vector<DnaQuad> dna_sequence(const Image& img, const std::vector<RuleId>& rules) {
  std::vector<DnaQuad> seq;
  seq.reserve(pixel_count(img));
  const std::uint8_t* p = img.data();
  for (std::size_t i = 0; i < pixel_count(img); ++i) seq.push_back(encode_byte(p[i], rules[i]));
  return seq;
}

double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace

Histogram histogram(const Image& img) {
  Histogram h = Histogram::Zero();
  const std::uint8_t* p = img.data();
  for (std::size_t i = 0; i < pixel_count(img); ++i) ++h(p[i]);
  return h;
}

Eigen::MatrixXcd dft_matrix(Eigen::Index n) {
  Eigen::MatrixXcd w(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // Reduce j*k first so the angle stays small and accurate.
      const double angle =
          -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      w(j, k) = std::polar(1.0, angle);
    }
  }
  return w;
}

Eigen::ArrayXXd magnitude_spectrum(const Image& img) {
  require_nonempty(img);
  const Eigen::MatrixXcd x = img.cast<double>().cast<std::complex<double>>();
  const Eigen::MatrixXcd f = dft_matrix(img.rows()) * x * dft_matrix(img.cols());
  return f.array().abs();
}

HistogramUniformity histogram_uniformity(const Image& img) {
  require_nonempty(img);
  const Eigen::Array<double, 256, 1> f = histogram(img).cast<double>();
  const double f0 = uniform_level_count(img);

  HistogramUniformity out;
  out.chi2 = ((f - f0).square() / f0).sum();
  // sum_i sum_j (f_i - f_j)^2 / 2 == N * sum f^2 - (sum f)^2
  out.hist_var = (256.0 * f.square().sum() - f.sum() * f.sum()) / (256.0 * 256.0);
  return out;
}

DeviationMetrics deviation_metrics(const Image& plain, const Image& cipher) {
  require_same_shape(plain, cipher);
  const Eigen::Array<double, 256, 1> hp = histogram(plain).cast<double>();
  const Eigen::Array<double, 256, 1> hc = histogram(cipher).cast<double>();
  const double total = static_cast<double>(pixel_count(plain));
  const double f0 = uniform_level_count(cipher);

  const Eigen::Array<double, 256, 1> d = (hp - hc).abs();

  DeviationMetrics out;
  out.di = (hc - f0).abs().sum() / total;
  out.md = ((d(0) + d(255)) / 2.0 + d.segment(1, 254).sum()) / total;
  out.mean_d = d.mean();
  out.id = (d - out.mean_d).abs().sum() / total;
  for (int i = 0; i < 256; ++i) out.d[static_cast<std::size_t>(i)] = d(i);
  return out;
}

std::int64_t hamming_distance(const std::vector<DnaQuad>& a, const std::vector<DnaQuad>& b) {
  if (a.size() != b.size()) throw DimensionError("DNA sequences differ in length");
  std::int64_t hd = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) hd += a[i][j] != b[i][j];
  return hd;
}

BaseRatio base_ratio(const std::vector<DnaQuad>& seq) {
  std::array<std::int64_t, 4> count{};
  for (const DnaQuad& q : seq)
    for (Base b : q) ++count[static_cast<std::size_t>(b)];
  const double total = 4.0 * static_cast<double>(seq.size());
  auto pct = [&](Base b) { return 100.0 * static_cast<double>(count[static_cast<std::size_t>(b)]) / total; };
  return {pct(Base::A), pct(Base::T), pct(Base::C), pct(Base::G)};
}

DnaSequenceMetrics dna_sequence_metrics(const Image& plain, const Image& cipher,
                                        const KeySchedule& schedule) {
  require_same_shape(plain, cipher);
  if (schedule.size() != pixel_count(plain))
    throw DimensionError("key schedule length does not match the image");
  const auto ps = dna_sequence(plain, schedule.rsq2);
  const auto cs = dna_sequence(cipher, schedule.rsq4);
  return {hamming_distance(ps, cs), base_ratio(ps), base_ratio(cs)};
}

double fixed_point_ratio(const Image& plain, const Image& cipher) {
  require_same_shape(plain, cipher);
  const auto same = (plain.array() == cipher.array()).count();
  return 100.0 * static_cast<double>(same) / static_cast<double>(pixel_count(plain));
}

AdjacentCorrelation adjacent_correlation(const Image& img) {
  require_nonempty(img);
  if (img.rows() < 2 || img.cols() < 2)
    throw DimensionError("adjacent correlation needs at least 2 rows and 2 columns");
  const Eigen::ArrayXXd x = as_real(img);
  const Eigen::Index h = x.rows();
  const Eigen::Index w = x.cols();
  return {pearson(x.leftCols(w - 1), x.rightCols(w - 1)),
          pearson(x.topRows(h - 1), x.bottomRows(h - 1))};
}

CorrelationMetrics correlation_metrics(const Image& plain, const Image& cipher) {
  require_same_shape(plain, cipher);
  return {adjacent_correlation(plain), adjacent_correlation(cipher),
          pearson(as_real(plain), as_real(cipher))};
}

double global_entropy(const Image& img) {
  require_nonempty(img);
  return shannon_entropy(histogram(img));
}

double local_entropy(const Image& img, int block) {
  require_nonempty(img);
  if (block <= 0 || img.rows() % block != 0 || img.cols() % block != 0)
    throw DimensionError("block size " + std::to_string(block) +
                         " does not divide the image dimensions");
  double sum = 0.0;
  Eigen::Index tiles = 0;
  for (Eigen::Index r = 0; r < img.rows(); r += block) {
    for (Eigen::Index c = 0; c < img.cols(); c += block) {
      Histogram h = Histogram::Zero();
      const auto tile = img.block(r, c, block, block);
      for (Eigen::Index i = 0; i < block; ++i)
        for (Eigen::Index j = 0; j < block; ++j) ++h(tile(i, j));
      sum += shannon_entropy(h);
      ++tiles;
    }
  }
  return sum / static_cast<double>(tiles);
}

EntropyMetrics entropy_metrics(const Image& img, const std::vector<int>& blocks) {
  EntropyMetrics out;
  out.global = global_entropy(img);
  for (int b : blocks) out.local[b] = local_entropy(img, b);
  return out;
}

double ssim_global(const Image& a, const Image& b) {
  require_same_shape(a, b);
  const Eigen::ArrayXXd x = as_real(a);
  const Eigen::ArrayXXd y = as_real(b);
  const double mx = x.mean();
  const double my = y.mean();
  const double vx = (x - mx).square().mean();
  const double vy = (y - my).square().mean();
  const double cxy = ((x - mx) * (y - my)).mean();
  return ((2.0 * mx * my + kSsimC1) * (2.0 * cxy + kSsimC2)) /
         ((mx * mx + my * my + kSsimC1) * (vx + vy + kSsimC2));
}

double spectral_distortion(const Image& a, const Image& b) {
  require_same_shape(a, b);
  return (magnitude_spectrum(a) - magnitude_spectrum(b)).abs().mean();
}

PerceptualMetrics perceptual_metrics(const Image& plain, const Image& cipher) {
  require_same_shape(plain, cipher);
  const Eigen::ArrayXXd diff = as_real(plain) - as_real(cipher);
  PerceptualMetrics out;
  out.mae = diff.abs().mean();
  out.mse = diff.square().mean();
  out.psnr = psnr_from_mse(out.mse);
  out.sd = spectral_distortion(plain, cipher);
  out.ssim = ssim_global(plain, cipher);
  return out;
}

DiffMetrics diff_metrics(const Image& c1, const Image& c2) {
  require_same_shape(c1, c2);
  const double total = static_cast<double>(pixel_count(c1));
  const auto changed = (c1.array() != c2.array()).count();
  const double intensity = (as_real(c1) - as_real(c2)).abs().sum() / 255.0;
  return {100.0 * static_cast<double>(changed) / total, 100.0 * intensity / total};
}

DiffMetrics plaintext_sensitivity(const SecretKey& key, const Image& plain,
                                  const PlaintextSensitivityOptions& options) {
  require_nonempty(plain);
  if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Eigen::Index> where(0, plain.size() - 1);

  DiffMetrics sum;
  for (int t = 0; t < options.trials; ++t) {
    const SecretKey trial_key = (t == 0 || !options.fresh_keys) ? key : generate_key(rng);
    const KeySchedule ks = derive_schedule(trial_key, static_cast<std::size_t>(plain.rows()),
                                           static_cast<std::size_t>(plain.cols()));
    Image touched = plain;
    std::uint8_t& px = touched.data()[where(rng)];
    px = static_cast<std::uint8_t>((px + options.delta) & 0xFF);

    const DiffMetrics d = diff_metrics(encrypt(plain, ks), encrypt(touched, ks));
    sum.npcr += d.npcr;
    sum.uaci += d.uaci;
  }
  sum.npcr /= options.trials;
  sum.uaci /= options.trials;
  return sum;
}

std::string to_string(KeyComponent c) {
  switch (c) {
    case KeyComponent::X0: return "X0";
    case KeyComponent::Y0: return "Y0";
    case KeyComponent::K: return "K";
    case KeyComponent::N: return "N";
    case KeyComponent::K1: return "K1";
    case KeyComponent::K2: return "K2";
    case KeyComponent::K3: return "K3";
    case KeyComponent::K4: return "K4";
  }
  return "?";
}

SecretKey perturb_key(const SecretKey& key, KeyComponent c, double delta, int skip_delta) {
  SecretKey out = key;
  auto angle = [&](double v) {
    const double up = v + delta;
    return up < kTwoPi<double> ? up : v - delta;
  };
  switch (c) {
    case KeyComponent::X0: out.x0 = angle(key.x0); break;
    case KeyComponent::Y0: out.y0 = angle(key.y0); break;
    case KeyComponent::K: out.k += delta; break;
    case KeyComponent::K1: out.k1 += delta; break;
    case KeyComponent::K2: out.k2 += delta; break;
    case KeyComponent::K3: out.k3 += delta; break;
    case KeyComponent::K4: out.k4 += delta; break;
    case KeyComponent::N:
      out.n = key.n + skip_delta < kMaxSkip ? key.n + skip_delta : key.n - skip_delta;
      break;
  }
  validate_key(out);
  return out;
}

std::vector<KeySensitivityRow> key_sensitivity_suite(const SecretKey& key, const Image& plain,
                                                     double delta, int skip_delta) {
  require_nonempty(plain);
  const Image cipher = encrypt(plain, key);

  std::vector<KeySensitivityRow> rows;
  for (KeyComponent c : kKeyComponents) {
    const SecretKey other = perturb_key(key, c, delta, skip_delta);
    const DiffMetrics d = diff_metrics(cipher, encrypt(plain, other));
    const Eigen::ArrayXXd err = as_real(decrypt(cipher, other)) - as_real(plain);

    KeySensitivityRow row;
    row.component = c;
    row.ks1 = d.npcr;
    row.ks2 = d.uaci;
    row.mae = err.abs().mean();
    row.mse = err.square().mean();
    row.psnr = psnr_from_mse(row.mse);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace smdna
