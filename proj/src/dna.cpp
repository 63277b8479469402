#include "smdna/dna.hpp"

#include <sstream>
#include <stdexcept>

namespace smdna {

namespace {

// Encoding column of each rule for the 2-bit values 00, 01, 10, 11.
constexpr std::array<std::array<Base, 4>, kRuleCount> kEncodeColumns{{
    {Base::A, Base::G, Base::C, Base::T},
    {Base::A, Base::C, Base::G, Base::T},
    {Base::T, Base::G, Base::C, Base::A},
    {Base::T, Base::C, Base::G, Base::A},
    {Base::C, Base::A, Base::T, Base::G},
    {Base::C, Base::T, Base::A, Base::G},
    {Base::G, Base::A, Base::T, Base::C},
    {Base::G, Base::T, Base::A, Base::C},
}};

std::array<RuleTable, kRuleCount> build_all() {
  std::array<RuleTable, kRuleCount> tables;
  for (int r = 1; r <= kRuleCount; ++r) tables[r - 1] = build_rule_table(RuleId(r));
  return tables;
}

}  // namespace

char to_char(Base b) {
  switch (b) {
    case Base::A: return 'A';
    case Base::T: return 'T';
    case Base::C: return 'C';
    case Base::G: return 'G';
  }
  return '?';
}

Base base_from_char(char c) {
  switch (c) {
    case 'A': return Base::A;
    case 'T': return Base::T;
    case 'C': return Base::C;
    case 'G': return Base::G;
    default: throw std::invalid_argument(std::string("not a DNA base: ") + c);
  }
}

RuleTable build_rule_table(RuleId rule) {
  RuleTable t;
  t.encode = kEncodeColumns[rule.index()];
  for (std::uint8_t v = 0; v < 4; ++v)
    t.value[static_cast<std::size_t>(t.encode[v])] = v;

  for (Base a : kAllBases) {
    for (Base b : kAllBases) {
      const unsigned va = t.value_of(a);
      const unsigned vb = t.value_of(b);
      const auto ia = static_cast<std::size_t>(a);
      const auto ib = static_cast<std::size_t>(b);
      t.add[ia][ib] = t.encode[(va + vb) & 3u];
      t.sub[ia][ib] = t.encode[(va + 4u - vb) & 3u];
    }
  }
  return t;
}

const RuleTable& rule_table(RuleId rule) {
  static const std::array<RuleTable, kRuleCount> tables = build_all();
  return tables[rule.index()];
}

DnaQuad encode_byte(std::uint8_t value, RuleId rule) {
  const RuleTable& t = rule_table(rule);
  return {t.encode[(value >> 6) & 3u], t.encode[(value >> 4) & 3u],
          t.encode[(value >> 2) & 3u], t.encode[value & 3u]};
}

std::uint8_t decode_quad(const DnaQuad& quad, RuleId rule) {
  const RuleTable& t = rule_table(rule);
  unsigned v = 0;
  for (Base b : quad) v = (v << 2) | t.value_of(b);
  return static_cast<std::uint8_t>(v);
}

DnaQuad dna_add(const DnaQuad& a, const DnaQuad& b, RuleId rule) {
  const RuleTable& t = rule_table(rule);
  return {t.plus(a[0], b[0]), t.plus(a[1], b[1]), t.plus(a[2], b[2]),
          t.plus(a[3], b[3])};
}

DnaQuad dna_sub(const DnaQuad& a, const DnaQuad& b, RuleId rule) {
  const RuleTable& t = rule_table(rule);
  return {t.minus(a[0], b[0]), t.minus(a[1], b[1]), t.minus(a[2], b[2]),
          t.minus(a[3], b[3])};
}

std::string to_string(const DnaQuad& quad) {
  std::string s;
  for (Base b : quad) s += to_char(b);
  return s;
}

std::string format_rule_tables(RuleId rule) {
  const RuleTable& t = rule_table(rule);
  std::ostringstream os;
  os << "Rule " << rule.value() << "\n\nEncoding\n";
  static constexpr const char* kPairs[4] = {"00", "01", "10", "11"};
  for (int v = 0; v < 4; ++v) os << kPairs[v] << "  " << to_char(t.encode[v]) << '\n';

  auto table = [&](const char* title, char op, auto&& cell) {
    os << '\n' << title << "\n" << op;
    for (Base b : kAllBases) os << ' ' << to_char(b);
    os << '\n';
    for (Base a : kAllBases) {
      os << to_char(a);
      for (Base b : kAllBases) os << ' ' << to_char(cell(a, b));
      os << '\n';
    }
  };
  table("Addition", '+', [&](Base a, Base b) { return t.plus(a, b); });
  table("Subtraction", '-', [&](Base a, Base b) { return t.minus(a, b); });
  return os.str();
}

}  // namespace smdna
