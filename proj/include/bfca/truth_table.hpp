#pragma once

// Boolean functions of 1..9 variables as packed truth tables.
//
// Conventions, used everywhere in this library:
//  - An input point is the integer x = sum over j of x_j * 2^j, i.e.
//    variable x_0 is the least significant bit of the index.
//  - Bit x of the table equals f(x).
//  - The hex form is most-significant-digit first, so the highest-order
//    hex digit describes f near the all-ones input. Rule 110 on three
//    variables is "6e". Hex is defined for arity >= 2; arity 1 uses the
//    binary form. The binary form is "0b" followed by 2^n characters,
//    leftmost = f(all ones).

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "bfca/detail/bits.hpp"
#include "bfca/error.hpp"

namespace bfca {

// Input points are plain table indices in [0, 2^arity).
using InputPoint = std::uint32_t;

class TruthTable {
public:
  TruthTable() = default; // the zero function of one variable

  static TruthTable zero(int arity) {
    check_arity(arity);
    TruthTable t;
    t.arity_ = arity;
    return t;
  }

  static TruthTable ones(int arity) {
    TruthTable t = zero(arity);
    for (int k = 0; k < detail::words_in_table(arity); ++k)
      t.words_[k] = ~0ull;
    t.words_[0] &= detail::short_table_mask(arity);
    return t;
  }

  // The projection f = x_index.
  static TruthTable variable(int arity, int index) {
    TruthTable t = zero(arity);
    if (index < 0 || index >= arity)
      throw DomainError("variable index " + std::to_string(index) +
                        " out of range for arity " + std::to_string(arity));
    for (int k = 0; k < detail::words_in_table(arity); ++k)
      t.words_[k] = detail::projection_word(index, k);
    t.words_[0] &= detail::short_table_mask(arity);
    return t;
  }

  static TruthTable from_hex(std::string_view hex, int arity) {
    check_arity(arity);
    if (arity < 2)
      throw ParseError("hex form undefined for arity 1; use the binary form");
    const std::size_t digits = (std::size_t{1} << arity) / 4;
    if (hex.size() != digits)
      throw ParseError("expected " + std::to_string(digits) +
                       " hex digits for arity " + std::to_string(arity) +
                       ", got " + std::to_string(hex.size()));
    TruthTable t = zero(arity);
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = hex[i];
      std::uint64_t v;
      if (c >= '0' && c <= '9') v = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v = static_cast<std::uint64_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v = static_cast<std::uint64_t>(c - 'A' + 10);
      else throw ParseError(std::string("invalid hex digit '") + c + "'");
      const std::size_t nibble = digits - 1 - i;
      t.words_[nibble / 16] |= v << (4 * (nibble % 16));
    }
    return t;
  }

  static TruthTable from_binary(std::string_view bits, int arity) {
    check_arity(arity);
    if (bits.substr(0, 2) != "0b")
      throw ParseError("binary form must start with \"0b\"");
    bits.remove_prefix(2);
    const std::size_t len = std::size_t{1} << arity;
    if (bits.size() != len)
      throw ParseError("expected " + std::to_string(len) +
                       " binary digits for arity " + std::to_string(arity) +
                       ", got " + std::to_string(bits.size()));
    TruthTable t = zero(arity);
    for (std::size_t i = 0; i < len; ++i) {
      if (bits[i] == '1') {
        const std::size_t pos = len - 1 - i;
        t.words_[pos / 64] |= 1ull << (pos % 64);
      } else if (bits[i] != '0') {
        throw ParseError(std::string("invalid binary digit '") + bits[i] + "'");
      }
    }
    return t;
  }

  // Packed table word for arity <= 5 (low 2^arity bits).
  static TruthTable from_u32(std::uint32_t word, int arity) {
    check_arity(arity);
    if (arity > 5) throw DomainError("from_u32 requires arity <= 5");
    TruthTable t = zero(arity);
    t.words_[0] = word & detail::short_table_mask(arity);
    return t;
  }

  static TruthTable from_words(int arity,
                               const std::array<std::uint64_t, 8>& words) {
    TruthTable t = zero(arity);
    for (int k = 0; k < detail::words_in_table(arity); ++k)
      t.words_[k] = words[k];
    t.words_[0] &= detail::short_table_mask(arity);
    return t;
  }

  std::string to_hex() const {
    if (arity_ < 2)
      throw DomainError("hex form undefined for arity 1; use to_binary");
    const std::size_t digits = (std::size_t{1} << arity_) / 4;
    std::string out(digits, '0');
    for (std::size_t nibble = 0; nibble < digits; ++nibble) {
      const auto v = static_cast<unsigned>(
          words_[nibble / 16] >> (4 * (nibble % 16)) & 0xf);
      out[digits - 1 - nibble] = "0123456789abcdef"[v];
    }
    return out;
  }

  std::string to_binary() const {
    const std::size_t len = std::size_t{1} << arity_;
    std::string out = "0b";
    out.reserve(len + 2);
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t pos = len - 1 - i;
      out += (words_[pos / 64] >> (pos % 64) & 1) ? '1' : '0';
    }
    return out;
  }

  int arity() const { return arity_; }
  std::uint32_t size() const { return 1u << arity_; }

  // Unchecked bit access; see eval() for the checked form.
  bool bit(std::uint32_t index) const {
    return words_[index >> 6] >> (index & 63) & 1;
  }

  int eval(InputPoint x) const {
    if (x >= size())
      throw DomainError("input point " + std::to_string(x) +
                        " out of range for arity " + std::to_string(arity_));
    return static_cast<int>(bit(x));
  }

  void set_bit(std::uint32_t index, bool value) {
    if (index >= size())
      throw DomainError("bit index " + std::to_string(index) +
                        " out of range for arity " + std::to_string(arity_));
    const std::uint64_t m = 1ull << (index & 63);
    if (value) words_[index >> 6] |= m;
    else words_[index >> 6] &= ~m;
  }

  std::uint32_t weight() const {
    return static_cast<std::uint32_t>(
        detail::popcount_words(words_.data(), arity_));
  }

  // Directional derivative x -> f(x) ^ f(x ^ direction).
  TruthTable derivative(InputPoint direction) const {
    if (direction >= size())
      throw DomainError("derivative direction " + std::to_string(direction) +
                        " out of range for arity " + std::to_string(arity_));
    TruthTable d = zero(arity_);
    detail::xor_translate(d.words_.data(), words_.data(), arity_, direction);
    for (int k = 0; k < detail::words_in_table(arity_); ++k)
      d.words_[k] ^= words_[k];
    return d;
  }

  TruthTable operator^(const TruthTable& other) const {
    if (arity_ != other.arity_)
      throw DomainError("xor of truth tables with different arities");
    TruthTable t = *this;
    for (int k = 0; k < detail::words_in_table(arity_); ++k)
      t.words_[k] ^= other.words_[k];
    return t;
  }

  std::uint32_t as_u32() const {
    return static_cast<std::uint32_t>(words_[0]);
  }

  const std::array<std::uint64_t, detail::kTableWords>& words() const {
    return words_;
  }

  bool operator==(const TruthTable&) const = default;

private:
  static void check_arity(int arity) {
    if (arity < 1 || arity > detail::kMaxArity)
      throw DomainError("arity must be between 1 and 9, got " +
                        std::to_string(arity));
  }

  int arity_ = 1;
  std::array<std::uint64_t, detail::kTableWords> words_{};
};

inline TruthTable derivative(const TruthTable& t, InputPoint direction) {
  return t.derivative(direction);
}

} // namespace bfca
