#pragma once

// DNA coding of bytes. Each of the eight complement-consistent rules maps the
// 2-bit values 00/01/10/11 onto the bases A/T/C/G; addition and subtraction
// under a rule are mod-4 arithmetic on the decoded 2-bit values.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace smdna {

enum class Base : std::uint8_t { A = 0, T = 1, C = 2, G = 3 };

inline constexpr std::array<Base, 4> kAllBases{Base::A, Base::T, Base::C,
                                               Base::G};

char to_char(Base b);
Base base_from_char(char c);

/// DNA coding rule number, 1..8.
class RuleId {
 public:
  /// Throws std::out_of_range outside 1..8.
  constexpr explicit RuleId(int id) : id_(id) {
    if (id < 1 || id > 8) throw std::out_of_range("DNA rule must be in 1..8");
  }

  constexpr int value() const noexcept { return id_; }
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(id_ - 1);
  }

  bool operator==(const RuleId&) const = default;

 private:
  int id_ = 1;
};

inline constexpr int kRuleCount = 8;

/// Four bases, most-significant bit pair first.
using DnaQuad = std::array<Base, 4>;

/// The quad used as the "previous cipher pixel" for the first pixel.
inline constexpr DnaQuad kInitialQuad{Base::A, Base::T, Base::C, Base::G};

struct RuleTable {
  std::array<Base, 4> encode{};          // 2-bit value -> base
  std::array<std::uint8_t, 4> value{};   // base (by enum index) -> 2-bit value
  std::array<std::array<Base, 4>, 4> add{};  // add[a][b] = a + b
  std::array<std::array<Base, 4>, 4> sub{};  // sub[a][b] = a - b

  Base plus(Base a, Base b) const {
    return add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  Base minus(Base a, Base b) const {
    return sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  std::uint8_t value_of(Base b) const {
    return value[static_cast<std::size_t>(b)];
  }
};

RuleTable build_rule_table(RuleId rule);

/// Prebuilt table, shared and immutable.
const RuleTable& rule_table(RuleId rule);

DnaQuad encode_byte(std::uint8_t value, RuleId rule);
std::uint8_t decode_quad(const DnaQuad& quad, RuleId rule);
DnaQuad dna_add(const DnaQuad& a, const DnaQuad& b, RuleId rule);
DnaQuad dna_sub(const DnaQuad& a, const DnaQuad& b, RuleId rule);

std::string to_string(const DnaQuad& quad);

/// Encode, addition and subtraction tables of one rule as plain text.
std::string format_rule_tables(RuleId rule);

}  // namespace smdna
