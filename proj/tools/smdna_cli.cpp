// smdna: command-line front end for the standard-map DNA image cipher.
//
//   smdna keygen --out key.txt [--seed S]
//   smdna encrypt --key key.txt --in plain.pgm --out cipher.pgm
//   smdna decrypt --key key.txt --in cipher.pgm --out plain.pgm
//   smdna analyze --key key.txt --plain p.pgm --cipher c.pgm --report r.json
//                 [--trials N] [--blocks 25,40,50]
//   smdna randomness --count N --bits M --report r.json
//   smdna tables --rule R
//
// Every command that writes a file also writes <file>.log, one line with
// SHA-256 digests of the inputs and the output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "smdna/cipher.hpp"
#include "smdna/dna.hpp"
#include "smdna/error.hpp"
#include "smdna/key_io.hpp"
#include "smdna/pnm.hpp"
#include "smdna/randomness.hpp"
#include "smdna/report.hpp"

namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw smdna::Error("cannot write " + path.string());
  out << text;
}

void write_sidecar(const std::string& command, const fs::path& output,
                   const std::vector<fs::path>& inputs) {
  std::ostringstream line;
  line << "command=" << command;
  for (const fs::path& in : inputs) line << " input=" << in.string() << " sha256=" << sha256_hex(slurp(in));
  line << " output=" << output.string() << " sha256=" << sha256_hex(slurp(output)) << '\n';
  fs::path log = output;
  log += ".log";
  write_text(log, line.str());
}

std::vector<int> parse_blocks(const std::string& list) {
  std::vector<int> blocks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    blocks.push_back(std::stoi(item));
  }
  return blocks;
}

smdna::PnmImage transform(const smdna::PnmImage& in, const smdna::SecretKey& key, bool forward) {
  smdna::PnmImage out;
  for (const smdna::Image& channel : in.channels)
    out.channels.push_back(forward ? smdna::encrypt(channel, key) : smdna::decrypt(channel, key));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard-map driven dynamic DNA image cipher"};
  app.require_subcommand(1);

  std::string out_path, key_path, in_path, plain_path, cipher_path, report_path, blocks_list = "25,40,50";
  std::uint64_t seed = 0;
  bool seeded = false;
  int trials = 10;
  std::size_t count = 100, bits = 100000;
  int rule = 1;

  auto* keygen = app.add_subcommand("keygen", "Generate a random secret key");
  keygen->add_option("--out", out_path, "Key file to write")->required();
  auto* seed_opt = keygen->add_option("--seed", seed, "Deterministic seed instead of the system entropy source");

  auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM/PPM image");
  auto* dec = app.add_subcommand("decrypt", "Decrypt a PGM/PPM image");
  for (auto* sub : {enc, dec}) {
    sub->add_option("--key", key_path, "Key file")->required()->check(CLI::ExistingFile);
    sub->add_option("--in", in_path, "Input image")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "Output image")->required();
  }

  auto* analyze = app.add_subcommand("analyze", "Compute security metrics for a plain/cipher pair");
  analyze->add_option("--key", key_path, "Key file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--plain", plain_path, "Plain image")->required()->check(CLI::ExistingFile);
  analyze->add_option("--cipher", cipher_path, "Cipher image")->required()->check(CLI::ExistingFile);
  analyze->add_option("--report", report_path, "JSON report to write")->required();
  analyze->add_option("--trials", trials, "Differential trials (0 disables)")->check(CLI::NonNegativeNumber);
  analyze->add_option("--blocks", blocks_list, "Comma-separated local-entropy block sizes");
  analyze->add_option("--seed", seed, "Seed for the differential campaign");

  auto* randomness = app.add_subcommand("randomness", "Statistical tests of the symbol generator");
  randomness->add_option("--count", count, "Number of sequences")->check(CLI::PositiveNumber);
  randomness->add_option("--bits", bits, "Bits per sequence")->check(CLI::PositiveNumber);
  randomness->add_option("--report", report_path, "JSON report to write")->required();
  randomness->add_option("--seed", seed, "Seed for key generation");

  auto* tables = app.add_subcommand("tables", "Print a DNA rule's encode/add/sub tables");
  tables->add_option("--rule", rule, "Rule number 1..8")->required()->check(CLI::Range(1, 8));

  CLI11_PARSE(app, argc, argv);
  seeded = seed_opt->count() > 0;

  try {
    if (*keygen) {
      std::mt19937_64 rng;
      if (seeded) {
        rng.seed(seed);
      } else {
        std::random_device rd;
        std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
        rng.seed(seq);
      }
      smdna::write_key_file(out_path, smdna::generate_key(rng));
      write_sidecar("keygen", out_path, {});
    } else if (*enc || *dec) {
      const bool forward = enc->parsed();
      const smdna::SecretKey key = smdna::read_key_file(key_path);
      const smdna::PnmImage image = smdna::read_pnm(in_path);
      smdna::write_pnm(out_path, transform(image, key, forward));
      write_sidecar(forward ? "encrypt" : "decrypt", out_path, {key_path, in_path});
    } else if (*analyze) {
      const smdna::SecretKey key = smdna::read_key_file(key_path);
      const smdna::PnmImage plain = smdna::read_pnm(plain_path);
      const smdna::PnmImage cipher = smdna::read_pnm(cipher_path);
      if (plain.channels.size() != cipher.channels.size())
        throw smdna::FormatError("plain and cipher images differ in channel count");

      smdna::AnalyzeOptions options;
      options.blocks = parse_blocks(blocks_list);
      options.trials = trials;
      options.seed = seed;

      nlohmann::json report;
      static constexpr const char* kChannelNames[3] = {"r", "g", "b"};
      for (std::size_t c = 0; c < plain.channels.size(); ++c) {
        const smdna::MetricsReport r =
            smdna::analyze(plain.channels[c], cipher.channels[c], key, options);
        if (plain.is_rgb()) {
          std::cout << "Channel " << kChannelNames[c] << "\n";
          report["channels"][kChannelNames[c]] = smdna::to_json(r);
        } else {
          report = smdna::to_json(r);
        }
        std::cout << smdna::render_text(r) << '\n';
      }
      write_text(report_path, report.dump(2) + "\n");
      write_sidecar("analyze", report_path, {key_path, plain_path, cipher_path});
    } else if (*randomness) {
      const smdna::BatchAssessment batch = smdna::batch_assess(count, bits, seed);
      for (const auto& t : batch.tests) {
        std::cout << t.name << ": proportion " << t.proportion << " (band [" << batch.band.lo
                  << ", " << batch.band.hi << "]) p_value_T " << t.p_value_t << ' '
                  << (t.proportion_ok && t.uniformity_ok ? "PASS" : "FAIL") << '\n';
      }
      write_text(report_path, smdna::to_json(batch).dump(2) + "\n");
      write_sidecar("randomness", report_path, {});
      return batch.passed() ? 0 : 2;
    } else if (*tables) {
      std::cout << smdna::format_rule_tables(smdna::RuleId(rule));
    }
  } catch (const smdna::KeyError& e) {
    std::cerr << "key error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
