// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every seed below is fixed; none was chosen after looking
// at results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "naive.hpp"
#include "smdna/cipher.hpp"
#include "smdna/dna.hpp"
#include "smdna/metrics.hpp"
#include "smdna/randomness.hpp"
#include "test_images.hpp"

using namespace smdna;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const std::string& name, const std::function<Outcome()>& criterion) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = criterion();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %-24s %s  [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(prec);
  os << v;
  return os.str();
}

bool natural(const std::string& name) { return name != "black" && name != "white"; }

// One encrypted 200x200 pair, shared by the statistical criteria.
struct Run {
  std::string image;
  Image plain;
  Image cipher;
  KeySchedule schedule;
};

// 20 (key, image) pairs: each standard image under four independent keys.
const std::vector<Run>& statistical_runs() {
  static const std::vector<Run> runs = [] {
    std::vector<Run> out;
    std::mt19937_64 rng(20200);
    const auto images = testing::standard_images();
    for (int k = 0; k < 4; ++k) {
      for (const auto& img : images) {
        const SecretKey key = generate_key(rng);
        KeySchedule s = derive_schedule(key, 200, 200);
        Image c = encrypt(img.image, s);
        out.push_back({img.name, img.image, std::move(c), std::move(s)});
      }
    }
    return out;
  }();
  return runs;
}

Outcome round_trip() {
  std::mt19937_64 rng(10100);
  int cases = 0;
  for (const auto& img : testing::standard_images()) {
    for (int k = 0; k < 5; ++k) {
      const SecretKey key = generate_key(rng);
      if (!same_pixels(decrypt(encrypt(img.image, key), key), img.image))
        return {false, img.name + " key " + std::to_string(k) + " did not round-trip"};
      ++cases;
    }
  }
  for (int k = 0; k < 8; ++k) {
    const SecretKey key = generate_key(rng);
    for (int v = 0; v < 256; ++v) {
      Image p(1, 1);
      p(0, 0) = static_cast<std::uint8_t>(v);
      if (!same_pixels(decrypt(encrypt(p, key), key), p)) return {false, "1x1 value " + std::to_string(v)};
      ++cases;
    }
  }
  for (int t = 0; t < 20000; ++t) {
    const Image p = testing::random_image(2, 2, rng());
    const SecretKey key = generate_key(rng);
    if (!same_pixels(decrypt(encrypt(p, key), key), p)) return {false, "2x2 sweep case " + std::to_string(t)};
    ++cases;
  }
  return {true, std::to_string(cases) + " images exact (25 standard, 2048 1x1, 20000 2x2)"};
}

Outcome table_oracle() {
  // Rows and columns in the order A T C G.
  const char* order = "ATCG";
  const char* add4[4] = {"GATC", "ATCG", "TCGA", "CGAT"};
  const char* sub4[4] = {"TAGC", "CTAG", "GCTA", "AGCT"};
  const RuleTable& t4 = rule_table(RuleId(4));
  int matched = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Base a = base_from_char(order[i]), b = base_from_char(order[j]);
      matched += to_char(t4.plus(a, b)) == add4[i][j];
      matched += to_char(t4.minus(a, b)) == sub4[i][j];
    }
  int arithmetic = 0;
  for (int r = 1; r <= 8; ++r) {
    const RuleTable& t = rule_table(RuleId(r));
    for (Base a : kAllBases)
      for (Base b : kAllBases) {
        const int va = t.value_of(a), vb = t.value_of(b);
        arithmetic += t.value_of(t.plus(a, b)) == (va + vb) % 4 && t.value_of(t.minus(a, b)) == (va - vb + 4) % 4;
      }
  }
  return {matched == 32 && arithmetic == 128,
          "rule-4 entries " + std::to_string(matched) + "/32, mod-4 pairs " + std::to_string(arithmetic) + "/128"};
}

Outcome constant_histogram() {
  const auto u = histogram_uniformity(testing::flat(0));
  // The reference HistVar figure has five significant digits, so it is matched at
  // that precision; the 1e-6 tolerance applies to the exact value
  // 40000^2 * 255 / 256^2.
  const double exact_var = 40000.0 * 40000.0 * 255.0 / 65536.0;
  char rounded[32];
  std::snprintf(rounded, sizeof rounded, "%.4e", u.hist_var);
  const bool ok = std::abs(u.chi2 - 10200000.0) <= 1e-6 * 10200000.0 &&
                  std::abs(u.hist_var - exact_var) <= 1e-6 * exact_var && std::string(rounded) == "6.2256e+06";
  return {ok, "chi2 " + fmt(u.chi2, 1) + ", HistVar " + fmt(u.hist_var, 4) + " (" + rounded + ")"};
}

Outcome cipher_uniformity() {
  int below = 0;
  double lo = 1e300, hi = 0;
  for (const Run& r : statistical_runs()) {
    const double chi2 = histogram_uniformity(r.cipher).chi2;
    below += chi2 < 293.25;
    lo = std::min(lo, chi2);
    hi = std::max(hi, chi2);
  }
  return {below >= 18, std::to_string(below) + "/20 runs below 293.25 (range " + fmt(lo, 1) + " to " + fmt(hi, 1) + ")"};
}

Outcome entropy() {
  double gmin = 9, lmin = 9;
  for (const Run& r : statistical_runs()) {
    gmin = std::min(gmin, global_entropy(r.cipher));
    lmin = std::min(lmin, local_entropy(r.cipher, 50));
  }
  return {gmin > 7.99 && lmin > 7.89, "min global " + fmt(gmin) + ", min local(50) " + fmt(lmin)};
}

Outcome correlations() {
  // First ten natural-image runs; constant plain images have no defined 2D correlation.
  double h = 0, v = 0, c2d = 0;
  int n = 0;
  for (const Run& r : statistical_runs()) {
    if (!natural(r.image) || n == 10) continue;
    const auto m = correlation_metrics(r.plain, r.cipher);
    h += std::abs(m.cipher.horizontal.value());
    v += std::abs(m.cipher.vertical.value());
    c2d += std::abs(m.corr_2d.value());
    ++n;
  }
  h /= n;
  v /= n;
  c2d /= n;
  return {n == 10 && h < 0.02 && v < 0.02 && c2d < 0.02,
          "mean |corr_h| " + fmt(h) + ", |corr_v| " + fmt(v) + ", |corr_2d| " + fmt(c2d) + " over " +
              std::to_string(n) + " runs"};
}

Outcome dna_metrics() {
  double hd_lo = 1, hd_hi = 0, br_dev = 0, fpr_max = 0;
  for (const Run& r : statistical_runs()) {
    const auto d = dna_sequence_metrics(r.plain, r.cipher, r.schedule);
    const double ratio = static_cast<double>(d.hd) / (4.0 * 200 * 200);
    hd_lo = std::min(hd_lo, ratio);
    hd_hi = std::max(hd_hi, ratio);
    for (const BaseRatio& b : {d.br_plain, d.br_cipher})
      for (double pct : {b.a, b.t, b.c, b.g}) br_dev = std::max(br_dev, std::abs(pct - 25.0));
    fpr_max = std::max(fpr_max, fixed_point_ratio(r.plain, r.cipher));
  }
  return {hd_lo >= 0.735 && hd_hi <= 0.765 && br_dev <= 0.7 && fpr_max < 0.6,
          "HD/4HW in [" + fmt(hd_lo) + ", " + fmt(hd_hi) + "], max |BR-25| " + fmt(br_dev) + ", max FPR " +
              fmt(fpr_max) + "%"};
}

Outcome differential() {
  // 50 trials per image; each trial draws a fresh key and pixel position.
  std::mt19937_64 rng(30300);
  std::string detail;
  bool ok = true;
  for (const auto& img : testing::standard_images()) {
    PlaintextSensitivityOptions opts;
    opts.trials = 50;
    opts.seed = rng();
    const DiffMetrics d = plaintext_sensitivity(generate_key(rng), img.image, opts);
    const bool pass = d.npcr >= 99.5 && d.npcr <= 99.75 && d.uaci >= 33.2 && d.uaci <= 33.7;
    ok = ok && pass;
    detail += img.name + " " + fmt(d.npcr) + "/" + fmt(d.uaci) + (pass ? "" : "(!)") + " ";
  }
  return {ok, "NPCR/UACI " + detail};
}

Outcome key_sensitivity() {
  std::mt19937_64 rng(40400);
  double ks1_lo = 100, ks1_hi = 0, ks2_lo = 100, ks2_hi = 0, psnr_hi = 0;
  for (const auto& img : testing::standard_images()) {
    for (const auto& row : key_sensitivity_suite(generate_key(rng), img.image)) {
      ks1_lo = std::min(ks1_lo, row.ks1);
      ks1_hi = std::max(ks1_hi, row.ks1);
      ks2_lo = std::min(ks2_lo, row.ks2);
      ks2_hi = std::max(ks2_hi, row.ks2);
      psnr_hi = std::max(psnr_hi, row.psnr);
    }
  }
  return {ks1_lo >= 98.5 && ks1_hi <= 99.8 && ks2_lo >= 33.0 && ks2_hi <= 33.8 && psnr_hi < 11.0,
          "KS1 [" + fmt(ks1_lo) + ", " + fmt(ks1_hi) + "], KS2 [" + fmt(ks2_lo) + ", " + fmt(ks2_hi) +
              "], max wrong-key PSNR " + fmt(psnr_hi, 2) + " dB over 40 rows"};
}

Outcome perceptual() {
  double psnr_hi = 0, ssim_hi = -1;
  for (const Run& r : statistical_runs()) {
    if (!natural(r.image)) continue;
    const auto p = perceptual_metrics(r.plain, r.cipher);
    psnr_hi = std::max(psnr_hi, p.psnr);
    ssim_hi = std::max(ssim_hi, p.ssim);
  }
  return {psnr_hi < 11.0 && ssim_hi < 0.05, "max PSNR " + fmt(psnr_hi, 2) + " dB, max SSIM " + fmt(ssim_hi)};
}

Outcome randomness() {
  const BatchAssessment b = batch_assess(100, 100000, 50500);
  std::string detail = "band [" + fmt(b.band.lo, 5) + ", " + fmt(b.band.hi, 5) + "]";
  for (const auto& t : b.tests)
    detail += "; " + t.name + " " + fmt(t.proportion, 2) + " p_T " + (t.p_value_t < 1e-4 ? "<" : "") +
              fmt(std::max(t.p_value_t, 1e-4), 4) + (t.proportion_ok && t.uniformity_ok ? "" : "(!)");
  return {b.passed(), detail};
}

double rel_err(double a, double b) {
  if (a == b) return 0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

double rel_err(std::optional<double> a, std::optional<double> b) {
  if (a.has_value() != b.has_value()) return INFINITY;
  return a ? rel_err(*a, *b) : 0;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(60600);
  double worst = 0;
  int pairs = 0;
  for (int t = 0; t < 50; ++t) {
    const Image plain = testing::random_image(8, 8, rng());
    const KeySchedule s = derive_schedule(generate_key(rng), 8, 8);
    const Image cipher = encrypt(plain, s);
    const auto p = naive::flatten(plain), c = naive::flatten(cipher);

    const auto u = histogram_uniformity(cipher);
    const auto d = deviation_metrics(plain, cipher);
    const auto dna = dna_sequence_metrics(plain, cipher, s);
    const auto br = naive::base_percent(c, s.rsq4);
    const auto brp = naive::base_percent(p, s.rsq2);
    const auto corr = correlation_metrics(plain, cipher);
    const auto pm = perceptual_metrics(plain, cipher);
    const auto dm = diff_metrics(plain, cipher);
    const double errs[] = {
        rel_err(u.chi2, naive::chi2(c)),
        rel_err(u.hist_var, naive::hist_var(c)),
        rel_err(d.di, naive::di(p, c)),
        rel_err(d.md, naive::md(p, c)),
        rel_err(d.id, naive::id(p, c)),
        rel_err(static_cast<double>(dna.hd), static_cast<double>(naive::dna_hamming(p, c, s))),
        rel_err(dna.br_cipher.a, br[0]), rel_err(dna.br_cipher.t, br[1]),
        rel_err(dna.br_cipher.c, br[2]), rel_err(dna.br_cipher.g, br[3]),
        rel_err(dna.br_plain.a, brp[0]), rel_err(dna.br_plain.g, brp[3]),
        rel_err(fixed_point_ratio(plain, cipher), naive::fpr(p, c)),
        rel_err(corr.plain.horizontal, naive::corr_h(p)),
        rel_err(corr.plain.vertical, naive::corr_v(p)),
        rel_err(corr.cipher.horizontal, naive::corr_h(c)),
        rel_err(corr.cipher.vertical, naive::corr_v(c)),
        rel_err(corr.corr_2d, naive::corr_2d(p, c)),
        rel_err(global_entropy(cipher), naive::entropy(c)),
        rel_err(local_entropy(cipher, 4), naive::local_entropy(c, 4)),
        rel_err(local_entropy(cipher, 2), naive::local_entropy(c, 2)),
        rel_err(pm.mae, naive::mae(p, c)),
        rel_err(pm.mse, naive::mse(p, c)),
        rel_err(pm.psnr, naive::psnr(p, c)),
        rel_err(pm.sd, naive::sd(p, c)),
        rel_err(pm.ssim, naive::ssim(p, c)),
        rel_err(dm.npcr, naive::npcr(p, c)),
        rel_err(dm.uaci, naive::uaci(p, c)),
    };
    for (double e : errs) {
      worst = std::max(worst, e);
      ++pairs;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return {worst <= 1e-9, std::to_string(pairs) + " comparisons, worst relative error " + buf};
}

}  // namespace

int main() {
  run("round-trip", round_trip);
  run("table-oracle", table_oracle);
  run("constant-histogram", constant_histogram);
  run("cipher-uniformity", cipher_uniformity);
  run("entropy", entropy);
  run("correlation", correlations);
  run("dna-metrics", dna_metrics);
  run("differential", differential);
  run("key-sensitivity", key_sensitivity);
  run("perceptual", perceptual);
  run("randomness", randomness);
  run("oracle-equivalence", oracle_equivalence);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
