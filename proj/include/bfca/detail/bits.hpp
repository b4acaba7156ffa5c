#pragma once

// Word-level kernels shared by the public headers. Truth tables are stored
// as little-endian bit vectors: bit x of the table is f(x), where input
// variable j is bit j of x.

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace bfca::detail {

inline constexpr int kMaxArity = 9;
inline constexpr int kTableWords = 8; // 512 bits, enough for arity 9

// Positions whose input has variable j set, within one 64-bit word (j < 6).
inline constexpr std::uint64_t kVarMask[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

constexpr int words_in_table(int arity) {
  return arity <= 6 ? 1 : 1 << (arity - 6);
}

// Mask of valid bits in word 0 when the table is shorter than one word.
constexpr std::uint64_t short_table_mask(int arity) {
  return arity >= 6 ? ~0ull : (1ull << (1u << arity)) - 1;
}

// Word w of the projection table for variable j (f = x_j) at the given arity.
constexpr std::uint64_t projection_word(int j, int word_index) {
  if (j < 6) return kVarMask[j];
  return (word_index >> (j - 6)) & 1 ? ~0ull : 0ull;
}

using Words = std::array<std::uint64_t, kTableWords>;

inline int popcount_words(const std::uint64_t* w, int arity) {
  int total = 0;
  for (int k = 0; k < words_in_table(arity); ++k) total += std::popcount(w[k]);
  return total;
}

// out[x] = in[x ^ delta]; in and out may not alias.
inline void xor_translate(std::uint64_t* out, const std::uint64_t* in, int arity,
                          std::uint32_t delta) {
  const int nwords = words_in_table(arity);
  const std::uint32_t high = delta >> 6;
  const std::uint32_t low = delta & 63u;
  for (int k = 0; k < nwords; ++k) {
    std::uint64_t v = in[k ^ high];
    std::uint32_t m = low;
    while (m) {
      const int j = std::countr_zero(m);
      m &= m - 1;
      v = ((v & kVarMask[j]) >> (1u << j)) | ((v & ~kVarMask[j]) << (1u << j));
    }
    out[k] = v;
  }
}

// Weight of the directional derivative f(x) ^ f(x ^ delta).
inline int derivative_weight(const std::uint64_t* w, int arity, std::uint32_t delta) {
  const int nwords = words_in_table(arity);
  const std::uint32_t high = delta >> 6;
  const std::uint32_t low = delta & 63u;
  int total = 0;
  for (int k = 0; k < nwords; ++k) {
    std::uint64_t v = w[k ^ high];
    std::uint32_t m = low;
    while (m) {
      const int j = std::countr_zero(m);
      m &= m - 1;
      v = ((v & kVarMask[j]) >> (1u << j)) | ((v & ~kVarMask[j]) << (1u << j));
    }
    total += std::popcount(w[k] ^ v);
  }
  return total;
}

// In-place Walsh-Hadamard butterfly; size must be a power of two.
inline void fwht(std::span<std::int32_t> a) {
  for (std::size_t step = 1; step < a.size(); step <<= 1)
    for (std::size_t block = 0; block < a.size(); block += step << 1)
      for (std::size_t i = block; i < block + step; ++i) {
        const std::int32_t x = a[i];
        const std::int32_t y = a[i + step];
        a[i] = x + y;
        a[i + step] = x - y;
      }
}

// In-place binary Moebius transform (its own inverse). Words beyond the
// table length must be zero and stay zero.
inline void mobius_inplace(std::uint64_t* w, int arity) {
  const int nwords = words_in_table(arity);
  const int inword = arity < 6 ? arity : 6;
  for (int j = 0; j < inword; ++j)
    for (int k = 0; k < nwords; ++k)
      w[k] ^= (w[k] & ~kVarMask[j]) << (1u << j);
  for (int j = 6; j < arity; ++j) {
    const int stride = 1 << (j - 6);
    for (int k = 0; k < nwords; ++k)
      if (!(k & stride)) w[k | stride] ^= w[k];
  }
}

// Bitmasks over table indices grouped by minimum popcount: entry k marks
// the inputs of weight >= k. Index by arity through weight_masks().
struct WeightMasks {
  std::array<Words, kMaxArity + 2> ge{};
};

inline const WeightMasks& weight_masks(int arity) {
  static const std::array<WeightMasks, kMaxArity + 1> tables = [] {
    std::array<WeightMasks, kMaxArity + 1> t{};
    for (int n = 1; n <= kMaxArity; ++n)
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        for (int k = 0; k <= std::popcount(x); ++k)
          t[n].ge[k][x >> 6] |= 1ull << (x & 63);
    return t;
  }();
  return tables[arity];
}

// Degree of the polynomial whose coefficient vector is w (Moebius output).
inline int anf_degree(const std::uint64_t* w, int arity) {
  const auto& masks = weight_masks(arity);
  const int nwords = words_in_table(arity);
  for (int k = arity; k >= 1; --k) {
    std::uint64_t any = 0;
    for (int i = 0; i < nwords; ++i) any |= w[i] & masks.ge[k][i];
    if (any) return k;
  }
  return 0;
}

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// i-th rule word of the deterministic sampling stream for a seed.
inline constexpr std::uint32_t sample_rule(std::uint64_t seed, std::uint64_t i) {
  return static_cast<std::uint32_t>(splitmix64(seed + i * 0x9e3779b97f4a7c15ull));
}

// A permutation of the 32 table positions, compiled to four byte lookup
// tables so applying it to a packed 32-bit table costs four loads.
struct BitPerm32 {
  std::array<std::array<std::uint32_t, 256>, 4> lut{};

  // sigma maps output position -> input position: out bit x = in bit sigma[x].
  static BitPerm32 compile(const std::array<std::uint8_t, 32>& sigma) {
    std::array<std::uint8_t, 32> inv{};
    for (int x = 0; x < 32; ++x) inv[sigma[x]] = static_cast<std::uint8_t>(x);
    BitPerm32 p;
    for (int byte = 0; byte < 4; ++byte)
      for (int val = 0; val < 256; ++val) {
        std::uint32_t out = 0;
        for (int q = 0; q < 8; ++q)
          if (val >> q & 1) out |= 1u << inv[8 * byte + q];
        p.lut[byte][val] = out;
      }
    return p;
  }

  std::uint32_t apply(std::uint32_t w) const {
    return lut[0][w & 0xff] | lut[1][w >> 8 & 0xff] | lut[2][w >> 16 & 0xff] |
           lut[3][w >> 24];
  }
};

// Open-addressing set of 32-bit keys with fixed capacity, used by the
// orbit search where std::unordered_set is needlessly slow.
class U32Set {
public:
  explicit U32Set(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2 + 2) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, 0);
    used_.assign(cap / 64 + 1, 0);
  }

  bool insert(std::uint32_t v) {
    std::size_t h = static_cast<std::size_t>(
        (v * 0x9e3779b97f4a7c15ull) >> 40) & mask_;
    for (;;) {
      if (!(used_[h >> 6] >> (h & 63) & 1)) {
        used_[h >> 6] |= 1ull << (h & 63);
        slots_[h] = v;
        ++count_;
        return true;
      }
      if (slots_[h] == v) return false;
      h = (h + 1) & mask_;
    }
  }

  std::size_t size() const { return count_; }

private:
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> used_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

} // namespace bfca::detail
