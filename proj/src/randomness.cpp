#include "smdna/randomness.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "smdna/key_schedule.hpp"

namespace smdna {

namespace {

double igamc(double a, double x) { return boost::math::gamma_q(a, x); }

void require_bits(const BitSequence& seq) {
  if (seq.size() == 0) throw std::invalid_argument("bit sequence is empty");
}

}  // namespace

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
}

BitSequence BitSequence::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("unexpected character in bit string");
  }
  return BitSequence(std::move(bits));
}

BitSequence symbols_to_bits(std::span<const RuleId> symbols) {
  std::vector<std::uint8_t> bits;
  bits.reserve(3 * symbols.size());
  for (RuleId s : symbols) {
    const int v = s.value() - 1;
    bits.push_back(static_cast<std::uint8_t>((v >> 2) & 1));
    bits.push_back(static_cast<std::uint8_t>((v >> 1) & 1));
    bits.push_back(static_cast<std::uint8_t>(v & 1));
  }
  return BitSequence(std::move(bits));
}

double monobit_test(const BitSequence& seq) {
  require_bits(seq);
  long long s = 0;
  for (auto b : seq.bits()) s += b ? 1 : -1;
  const double n = static_cast<double>(seq.size());
  return std::erfc(std::abs(static_cast<double>(s)) / std::sqrt(2.0 * n));
}

double block_frequency_test(const BitSequence& seq, std::size_t block) {
  require_bits(seq);
  if (block == 0 || block > seq.size())
    throw std::invalid_argument("block length must be in 1..n");
  const std::size_t blocks = seq.size() / block;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block; ++j) ones += seq[i * block + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(block) - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * static_cast<double>(block);
  return igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

double runs_test(const BitSequence& seq) {
  require_bits(seq);
  const double n = static_cast<double>(seq.size());
  std::size_t ones = 0;
  for (auto b : seq.bits()) ones += b;
  const double pi = static_cast<double>(ones) / n;
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;

  std::size_t runs = 1;
  for (std::size_t k = 1; k < seq.size(); ++k) runs += seq[k] != seq[k - 1];
  const double v = static_cast<double>(runs);
  const double q = pi * (1.0 - pi);
  return std::erfc(std::abs(v - 2.0 * n * q) / (2.0 * std::sqrt(2.0 * n) * q));
}

std::map<std::string, double> run_statistical_tests(const BitSequence& seq) {
  if (seq.size() < kMinTestBits)
    throw std::invalid_argument("statistical tests need at least 100 bits");
  return {{"monobit", monobit_test(seq)},
          {"block_frequency", block_frequency_test(seq, std::min<std::size_t>(128, seq.size()))},
          {"runs", runs_test(seq)}};
}

double pvalue_uniformity(std::span<const double> pvalues) {
  if (pvalues.size() < kMinUniformitySamples)
    throw std::invalid_argument("uniformity check needs at least 55 p-values");
  std::array<double, 10> bins{};
  for (double p : pvalues) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p-value outside [0, 1]");
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9);
    bins[bin] += 1.0;
  }
  const double expected = static_cast<double>(pvalues.size()) / 10.0;
  double chi2 = 0.0;
  for (double f : bins) chi2 += (f - expected) * (f - expected) / expected;
  return igamc(9.0 / 2.0, chi2 / 2.0);
}

ProportionBand proportion_band(std::size_t count, double p_hat) {
  if (count == 0) throw std::invalid_argument("proportion band needs count > 0");
  const double half = 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(count));
  return {std::max(0.0, p_hat - half), std::min(1.0, p_hat + half)};
}

bool BatchAssessment::passed() const {
  for (const auto& t : tests)
    if (!t.proportion_ok || !t.uniformity_ok) return false;
  return !tests.empty();
}

BatchAssessment assess(const std::vector<std::map<std::string, double>>& results,
                       std::size_t bit_length) {
  if (results.size() < kMinUniformitySamples)
    throw std::invalid_argument("batch assessment needs at least 55 sequences");
  BatchAssessment batch;
  batch.count = results.size();
  batch.bit_length = bit_length;
  batch.band = proportion_band(batch.count);

  for (const auto& [name, unused] : results.front()) {
    TestAssessment t;
    t.name = name;
    std::vector<double> pvalues;
    pvalues.reserve(results.size());
    for (const auto& r : results) {
      const double p = r.at(name);
      pvalues.push_back(p);
      t.passed += p > kSignificance;
    }
    t.proportion = static_cast<double>(t.passed) / static_cast<double>(batch.count);
    t.p_value_t = pvalue_uniformity(pvalues);
    t.proportion_ok = t.proportion >= batch.band.lo && t.proportion <= batch.band.hi;
    t.uniformity_ok = t.p_value_t > kUniformityThreshold;
    batch.tests.push_back(std::move(t));
  }
  return batch;
}

BatchAssessment batch_assess(std::size_t count, std::size_t bit_length, std::uint64_t seed) {
  if (count < kMinUniformitySamples)
    throw std::invalid_argument("count must be at least 55");
  if (bit_length < 10000) throw std::invalid_argument("bit length must be at least 10000");

  std::mt19937_64 rng(seed);
  std::vector<std::map<std::string, double>> results;
  results.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const SecretKey key = generate_key(rng);
    BitSequence bits = symbols_to_bits(symbol_stream(key, (bit_length + 2) / 3));
    bits.truncate(bit_length);
    results.push_back(run_statistical_tests(bits));
  }
  return assess(results, bit_length);
}

nlohmann::json to_json(const BatchAssessment& batch) {
  nlohmann::json tests = nlohmann::json::object();
  for (const auto& t : batch.tests) {
    tests[t.name] = {{"passed", t.passed},
                     {"proportion", t.proportion},
                     {"p_value_t", t.p_value_t},
                     {"proportion_ok", t.proportion_ok},
                     {"uniformity_ok", t.uniformity_ok}};
  }
  return {{"count", batch.count},
          {"bits", batch.bit_length},
          {"band", {batch.band.lo, batch.band.hi}},
          {"tests", tests},
          {"passed", batch.passed()}};
}

}  // namespace smdna
