#include "smdna/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "smdna/cipher.hpp"

namespace smdna {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

// JSON has no infinity; an exact reconstruction reports "inf".
json finite_or_flag(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

json base_ratio_json(const BaseRatio& br) {
  return {{"A", br.a}, {"T", br.t}, {"C", br.c}, {"G", br.g}};
}

json entropy_json(const EntropyMetrics& e) {
  json local = json::object();
  for (const auto& [block, value] : e.local) local[std::to_string(block)] = value;
  return {{"global", e.global}, {"local", local}};
}

std::string fmt(double v, int precision = 4) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  const double mag = std::abs(v);
  if (v != 0.0 && (mag >= 1e5 || mag < 1e-3))
    os << std::scientific << std::setprecision(precision) << v;
  else
    os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "undefined"; }

}  // namespace

MetricsReport analyze(const Image& plain, const Image& cipher, const SecretKey& key,
                      const AnalyzeOptions& options) {
  require_same_shape(plain, cipher);
  const KeySchedule ks = derive_schedule(key, static_cast<std::size_t>(plain.rows()),
                                         static_cast<std::size_t>(plain.cols()));
  MetricsReport r;
  r.height = static_cast<int>(plain.rows());
  r.width = static_cast<int>(plain.cols());
  r.hist_plain = histogram_uniformity(plain);
  r.hist_cipher = histogram_uniformity(cipher);
  r.deviation = deviation_metrics(plain, cipher);
  r.dna = dna_sequence_metrics(plain, cipher, ks);
  r.fpr = fixed_point_ratio(plain, cipher);
  r.correlation = correlation_metrics(plain, cipher);
  r.entropy_plain = entropy_metrics(plain, options.blocks);
  r.entropy_cipher = entropy_metrics(cipher, options.blocks);
  r.perceptual = perceptual_metrics(plain, cipher);

  if (options.trials > 0) {
    PlaintextSensitivityOptions po;
    po.trials = options.trials;
    po.seed = options.seed;
    r.differential = plaintext_sensitivity(key, plain, po);
    r.differential_trials = options.trials;
  }
  if (options.key_sensitivity) r.key_sensitivity = key_sensitivity_suite(key, plain);
  return r;
}

json to_json(const MetricsReport& r) {
  json j;
  j["height"] = r.height;
  j["width"] = r.width;
  j["chi2"] = {{"plain", r.hist_plain.chi2}, {"cipher", r.hist_cipher.chi2}};
  j["hist_var"] = {{"plain", r.hist_plain.hist_var}, {"cipher", r.hist_cipher.hist_var}};
  j["di"] = r.deviation.di;
  j["md"] = r.deviation.md;
  j["id"] = r.deviation.id;
  j["d"] = r.deviation.d;
  j["m_d"] = r.deviation.mean_d;
  j["hd"] = r.dna.hd;
  j["br"] = {{"plain", base_ratio_json(r.dna.br_plain)},
             {"cipher", base_ratio_json(r.dna.br_cipher)}};
  j["fpr"] = r.fpr;
  j["corr_h"] = {{"plain", optional_number(r.correlation.plain.horizontal)},
                 {"cipher", optional_number(r.correlation.cipher.horizontal)}};
  j["corr_v"] = {{"plain", optional_number(r.correlation.plain.vertical)},
                 {"cipher", optional_number(r.correlation.cipher.vertical)}};
  j["corr_2d"] = optional_number(r.correlation.corr_2d);
  j["entropy"] = {{"plain", entropy_json(r.entropy_plain)},
                  {"cipher", entropy_json(r.entropy_cipher)}};
  j["mae"] = r.perceptual.mae;
  j["mse"] = r.perceptual.mse;
  j["psnr"] = finite_or_flag(r.perceptual.psnr);
  j["sd"] = r.perceptual.sd;
  j["ssim"] = r.perceptual.ssim;

  if (r.differential) {
    j["npcr"] = r.differential->npcr;
    j["uaci"] = r.differential->uaci;
    j["trials"] = r.differential_trials;
  } else {
    j["npcr"] = nullptr;
    j["uaci"] = nullptr;
    j["trials"] = 0;
  }

  json ks = json::object();
  for (const KeySensitivityRow& row : r.key_sensitivity) {
    ks[to_string(row.component)] = {{"ks1", row.ks1},
                                    {"ks2", row.ks2},
                                    {"mae", row.mae},
                                    {"mse", row.mse},
                                    {"psnr", finite_or_flag(row.psnr)}};
  }
  j["key_sensitivity"] = ks;
  return j;
}

std::string render_text(const MetricsReport& r) {
  std::ostringstream os;
  const auto row = [&](const std::string& label, const std::string& plain,
                       const std::string& cipher) {
    os << std::left << std::setw(26) << label << std::setw(16) << plain << cipher << '\n';
  };

  os << "Image " << r.height << " x " << r.width << "\n\n";
  row("", "Plain", "Cipher");
  row("Chi-square", fmt(r.hist_plain.chi2), fmt(r.hist_cipher.chi2));
  row("HistVar", fmt(r.hist_plain.hist_var), fmt(r.hist_cipher.hist_var));
  row("Corr. horizontal", fmt(r.correlation.plain.horizontal),
      fmt(r.correlation.cipher.horizontal));
  row("Corr. vertical", fmt(r.correlation.plain.vertical), fmt(r.correlation.cipher.vertical));
  row("Global entropy", fmt(r.entropy_plain.global), fmt(r.entropy_cipher.global));
  for (const auto& [block, value] : r.entropy_plain.local) {
    row("Local entropy " + std::to_string(block) + "x" + std::to_string(block), fmt(value),
        fmt(r.entropy_cipher.local.at(block)));
  }
  row("Base ratio A", fmt(r.dna.br_plain.a), fmt(r.dna.br_cipher.a));
  row("Base ratio T", fmt(r.dna.br_plain.t), fmt(r.dna.br_cipher.t));
  row("Base ratio C", fmt(r.dna.br_plain.c), fmt(r.dna.br_cipher.c));
  row("Base ratio G", fmt(r.dna.br_plain.g), fmt(r.dna.br_cipher.g));

  os << '\n';
  const auto single = [&](const std::string& label, const std::string& v) {
    os << std::left << std::setw(26) << label << v << '\n';
  };
  single("DI", fmt(r.deviation.di));
  single("MD", fmt(r.deviation.md));
  single("ID", fmt(r.deviation.id));
  single("Hamming distance", std::to_string(r.dna.hd));
  single("FPR (%)", fmt(r.fpr));
  single("2D correlation", fmt(r.correlation.corr_2d));
  single("MAE", fmt(r.perceptual.mae));
  single("MSE", fmt(r.perceptual.mse));
  single("PSNR (dB)", fmt(r.perceptual.psnr));
  single("SD", fmt(r.perceptual.sd));
  single("SSIM", fmt(r.perceptual.ssim));
  if (r.differential) {
    single("NPCR (%)", fmt(r.differential->npcr));
    single("UACI (%)", fmt(r.differential->uaci));
  }

  if (!r.key_sensitivity.empty()) {
    os << '\n' << std::left << std::setw(8) << "";
    for (const auto& k : r.key_sensitivity) os << std::setw(10) << to_string(k.component);
    os << '\n';
    const auto line = [&](const char* label, auto field) {
      os << std::left << std::setw(8) << label;
      for (const auto& k : r.key_sensitivity) os << std::setw(10) << fmt(field(k));
      os << '\n';
    };
    line("KS1", [](const KeySensitivityRow& k) { return k.ks1; });
    line("KS2", [](const KeySensitivityRow& k) { return k.ks2; });
    line("MAE", [](const KeySensitivityRow& k) { return k.mae; });
    line("MSE", [](const KeySensitivityRow& k) { return k.mse; });
    line("PSNR", [](const KeySensitivityRow& k) { return k.psnr; });
  }
  return os.str();
}

}  // namespace smdna
