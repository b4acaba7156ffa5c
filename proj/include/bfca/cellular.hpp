#pragma once

// One-dimensional cellular automata with odd-arity local rules, and the
// two-step construction that turns a 5-variable rule into a 9-variable
// function: place the 9 inputs on a row of cells, apply the rule wherever
// its window fits (cells 2..6), apply it once more to those 5 results.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bfca/detail/bits.hpp"
#include "bfca/error.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

enum class Boundary { circular, truncating };

struct CAState {
  std::vector<std::uint8_t> cells; // 0/1 values
  Boundary boundary = Boundary::circular;
  TruthTable rule; // odd arity; leftmost window cell is the high index bit
};

inline CAState ca_step(const CAState& s) {
  const int r = s.rule.arity();
  if (r % 2 == 0)
    throw DomainError("cellular rules need odd arity, got " + std::to_string(r));
  const int radius = (r - 1) / 2;
  const int len = static_cast<int>(s.cells.size());
  CAState out;
  out.boundary = s.boundary;
  out.rule = s.rule;
  if (s.boundary == Boundary::truncating) {
    if (len < r)
      throw DomainError("state of " + std::to_string(len) +
                        " cells is too short for an arity-" + std::to_string(r) +
                        " rule");
    out.cells.resize(len - r + 1);
    for (int k = 0; k < len - r + 1; ++k) {
      std::uint32_t idx = 0;
      for (int q = 0; q < r; ++q)
        idx |= static_cast<std::uint32_t>(s.cells[k + q] & 1) << (r - 1 - q);
      out.cells[k] = static_cast<std::uint8_t>(s.rule.bit(idx));
    }
  } else {
    if (len < 1) throw DomainError("empty state");
    out.cells.resize(len);
    for (int i = 0; i < len; ++i) {
      std::uint32_t idx = 0;
      for (int o = -radius; o <= radius; ++o) {
        const int cell = ((i + o) % len + len) % len;
        idx |= static_cast<std::uint32_t>(s.cells[cell] & 1) << (radius - o);
      }
      out.cells[i] = static_cast<std::uint8_t>(s.rule.bit(idx));
    }
  }
  return out;
}

inline std::string render_row(const std::vector<std::uint8_t>& cells) {
  std::string out(cells.size(), '.');
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i]) out[i] = '#';
  return out;
}

namespace detail {

// Bit-reversal of a 5-bit window index. The extension works on the
// reversed rule table so that the first window variable is the low bit.
inline constexpr std::array<std::uint8_t, 32> kRev5 = [] {
  std::array<std::uint8_t, 32> t{};
  for (int m = 0; m < 32; ++m) {
    int v = 0;
    for (int b = 0; b < 5; ++b)
      if (m >> b & 1) v |= 1 << (4 - b);
    t[m] = static_cast<std::uint8_t>(v);
  }
  return t;
}();

// Stretch tables: bit b of the input becomes a run of 2/4/8 copies.
inline constexpr std::array<std::uint16_t, 256> kStretch2 = [] {
  std::array<std::uint16_t, 256> t{};
  for (int v = 0; v < 256; ++v)
    for (int b = 0; b < 8; ++b)
      if (v >> b & 1) t[v] = static_cast<std::uint16_t>(t[v] | 0x3u << (2 * b));
  return t;
}();

inline constexpr std::array<std::uint32_t, 256> kStretch4 = [] {
  std::array<std::uint32_t, 256> t{};
  for (int v = 0; v < 256; ++v)
    for (int b = 0; b < 8; ++b)
      if (v >> b & 1) t[v] |= 0xfu << (4 * b);
  return t;
}();

inline constexpr std::array<std::uint64_t, 256> kStretch8 = [] {
  std::array<std::uint64_t, 256> t{};
  for (int v = 0; v < 256; ++v)
    for (int b = 0; b < 8; ++b)
      if (v >> b & 1) t[v] |= 0xffull << (8 * b);
  return t;
}();

// 512-bit truth table of the 9-variable extension of a packed 5-variable
// rule. Evaluates all 512 inputs at once: the five window outputs
// y_2..y_6 are bit-parallel index slices, and the outer rule application
// is a mux tree over them.
inline Words extend_words(std::uint32_t rule) {
  std::uint32_t frev = 0;
  for (int m = 0; m < 32; ++m)
    if (rule >> kRev5[m] & 1) frev |= 1u << m;

  // Slice k of y_i over the 512 inputs: input v sits at bit (v & 63) of
  // word (v >> 6), and y_i as a function of v has period 2^(i+1) in v.
  const std::uint64_t y2 =
      static_cast<std::uint64_t>(frev) * 0x100000001ull;
  const std::uint64_t y3 =
      static_cast<std::uint64_t>(kStretch2[frev & 0xff]) |
      static_cast<std::uint64_t>(kStretch2[frev >> 8 & 0xff]) << 16 |
      static_cast<std::uint64_t>(kStretch2[frev >> 16 & 0xff]) << 32 |
      static_cast<std::uint64_t>(kStretch2[frev >> 24 & 0xff]) << 48;
  std::array<std::uint64_t, 2> y4;
  for (int h = 0; h < 2; ++h) {
    const std::uint32_t half = frev >> (16 * h);
    y4[h] = static_cast<std::uint64_t>(kStretch4[half & 0xff]) |
            static_cast<std::uint64_t>(kStretch4[half >> 8 & 0xff]) << 32;
  }
  std::array<std::uint64_t, 4> y5;
  for (int q = 0; q < 4; ++q) y5[q] = kStretch8[frev >> (8 * q) & 0xff];

  Words out{};
  for (int k = 0; k < 8; ++k) {
    std::uint64_t y6 = 0;
    for (int b = 0; b < 4; ++b)
      if (frev >> (4 * k + b) & 1) y6 |= 0xffffull << (16 * b);

    // Outer rule via Shannon expansion, selecting on y2 first (the low
    // bit of the reversed window index), then y3, y4, y5, y6.
    std::uint64_t node[16];
    for (int t = 0; t < 16; ++t) {
      const bool lo = frev >> (2 * t) & 1;
      const bool hi = frev >> (2 * t + 1) & 1;
      node[t] = lo ? (hi ? ~0ull : ~y2) : (hi ? y2 : 0ull);
    }
    for (int t = 0; t < 8; ++t)
      node[t] = node[2 * t] ^ ((node[2 * t] ^ node[2 * t + 1]) & y3);
    for (int t = 0; t < 4; ++t)
      node[t] = node[2 * t] ^ ((node[2 * t] ^ node[2 * t + 1]) & y4[k & 1]);
    for (int t = 0; t < 2; ++t)
      node[t] = node[2 * t] ^ ((node[2 * t] ^ node[2 * t + 1]) & y5[k & 3]);
    out[k] = node[0] ^ ((node[0] ^ node[1]) & y6);
  }
  return out;
}

} // namespace detail

inline TruthTable extend_5_to_9(const TruthTable& rule) {
  if (rule.arity() != 5)
    throw DomainError("the extension maps 5-variable rules to 9 variables");
  return TruthTable::from_words(9, detail::extend_words(rule.as_u32()));
}

} // namespace bfca
