#pragma once

// Affine equivalence machinery for 5-variable functions: the transform
// group f(x) = g(Ax + b) + c.x + d with A invertible, class-invariant
// signatures, and orbit enumeration.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <vector>

#include "bfca/detail/bits.hpp"
#include "bfca/error.hpp"
#include "bfca/transforms.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

struct AffineTransform {
  // Row i of A, packed little-endian: bit j is A[i][j].
  std::array<std::uint8_t, 5> matrix{};
  std::uint8_t input_offset = 0; // b
  std::uint8_t output_mask = 0;  // c
  bool output_complement = false; // d

  static AffineTransform identity() {
    AffineTransform t;
    for (int i = 0; i < 5; ++i) t.matrix[i] = static_cast<std::uint8_t>(1 << i);
    return t;
  }

  bool operator==(const AffineTransform&) const = default;
};

inline bool is_invertible(const std::array<std::uint8_t, 5>& matrix) {
  auto rows = matrix;
  for (int col = 0; col < 5; ++col) {
    int pivot = -1;
    for (int r = col; r < 5; ++r)
      if (rows[r] >> col & 1) { pivot = r; break; }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = 0; r < 5; ++r)
      if (r != col && (rows[r] >> col & 1)) rows[r] ^= rows[col];
  }
  return true;
}

namespace detail {

inline std::uint8_t matvec5(const std::array<std::uint8_t, 5>& m, std::uint8_t x) {
  std::uint8_t y = 0;
  for (int i = 0; i < 5; ++i)
    y |= static_cast<std::uint8_t>((std::popcount(unsigned(m[i] & x)) & 1) << i);
  return y;
}

// Row-combination form of P*Q: row i of the product is the xor of the rows
// of Q selected by row i of P.
inline std::array<std::uint8_t, 5> matmul5(const std::array<std::uint8_t, 5>& p,
                                           const std::array<std::uint8_t, 5>& q) {
  std::array<std::uint8_t, 5> out{};
  for (int i = 0; i < 5; ++i) {
    std::uint8_t row = 0;
    for (int j = 0; j < 5; ++j)
      if (p[i] >> j & 1) row ^= q[j];
    out[i] = row;
  }
  return out;
}

inline std::uint8_t vecmat5(std::uint8_t c, const std::array<std::uint8_t, 5>& m) {
  std::uint8_t out = 0;
  for (int i = 0; i < 5; ++i)
    if (c >> i & 1) out ^= m[i];
  return out;
}

} // namespace detail

// f(x) = g(Ax + b) + c.x + d.
inline TruthTable apply_transform(const TruthTable& g, const AffineTransform& t) {
  if (g.arity() != 5)
    throw DomainError("affine transforms act on 5-variable functions");
  if (!is_invertible(t.matrix))
    throw DomainError("affine transform matrix is singular");
  const std::uint32_t gw = g.as_u32();
  std::uint32_t fw = 0;
  for (std::uint32_t x = 0; x < 32; ++x) {
    const std::uint8_t y = static_cast<std::uint8_t>(
        detail::matvec5(t.matrix, static_cast<std::uint8_t>(x)) ^ t.input_offset);
    std::uint32_t bit = gw >> y & 1;
    bit ^= static_cast<std::uint32_t>(std::popcount(unsigned(t.output_mask & x)) & 1);
    bit ^= static_cast<std::uint32_t>(t.output_complement);
    fw |= bit << x;
  }
  return TruthTable::from_u32(fw, 5);
}

// apply_transform(g, compose(second, first))
//   == apply_transform(apply_transform(g, first), second).
inline AffineTransform compose(const AffineTransform& second,
                               const AffineTransform& first) {
  AffineTransform out;
  out.matrix = detail::matmul5(first.matrix, second.matrix);
  out.input_offset = static_cast<std::uint8_t>(
      detail::matvec5(first.matrix, second.input_offset) ^ first.input_offset);
  out.output_mask = static_cast<std::uint8_t>(
      detail::vecmat5(first.output_mask, second.matrix) ^ second.output_mask);
  out.output_complement =
      ((std::popcount(unsigned(first.output_mask & second.input_offset)) & 1) ^
       static_cast<int>(first.output_complement) ^
       static_cast<int>(second.output_complement)) != 0;
  return out;
}

template <typename Rng>
AffineTransform random_transform(Rng& rng) {
  AffineTransform t;
  do {
    for (auto& row : t.matrix)
      row = static_cast<std::uint8_t>(rng() & 31);
  } while (!is_invertible(t.matrix));
  t.input_offset = static_cast<std::uint8_t>(rng() & 31);
  t.output_mask = static_cast<std::uint8_t>(rng() & 31);
  t.output_complement = (rng() & 1) != 0;
  return t;
}

// Invariant fingerprint of an affine class: the algebraic degree plus the
// sorted absolute Walsh and autocorrelation spectra. The 48 classes of
// 5-variable functions all have distinct signatures, which the registry
// verifies at load time, so signature lookup classifies exactly.
struct ClassSignature {
  std::uint8_t degree = 0;
  std::array<std::uint8_t, 32> walsh_abs{};
  std::array<std::uint8_t, 32> autocorr_abs{};

  auto operator<=>(const ClassSignature&) const = default;
};

namespace detail {

inline ClassSignature signature_from_word(std::uint32_t rule) {
  std::array<std::int32_t, 32> s;
  for (std::uint32_t x = 0; x < 32; ++x)
    s[x] = (rule >> x & 1) ? -1 : 1;
  fwht(s);
  std::array<std::int32_t, 32> r;
  for (int i = 0; i < 32; ++i) r[i] = s[i] * s[i];
  fwht(r);

  ClassSignature sig;
  for (int i = 0; i < 32; ++i) {
    sig.walsh_abs[i] = static_cast<std::uint8_t>(s[i] < 0 ? -s[i] : s[i]);
    const std::int32_t a = r[i] >> 5;
    sig.autocorr_abs[i] = static_cast<std::uint8_t>(a < 0 ? -a : a);
  }
  std::sort(sig.walsh_abs.begin(), sig.walsh_abs.end());
  std::sort(sig.autocorr_abs.begin(), sig.autocorr_abs.end());

  std::uint64_t anf = rule;
  mobius_inplace(&anf, 5);
  // Constants sit in the same class as the degree-1 functions (adding a
  // linear output term moves between them), so degree 0 is folded into 1.
  sig.degree =
      static_cast<std::uint8_t>(std::max(1, anf_degree(&anf, 5)));
  return sig;
}

} // namespace detail

inline ClassSignature signature(const TruthTable& t) {
  if (t.arity() != 5)
    throw DomainError("class signatures are defined for 5-variable functions");
  return detail::signature_from_word(t.as_u32());
}

namespace detail {

// The 41 orbit generators: 10 variable swaps, 20 single transvections
// x_i <- x_i + x_j, 5 input complements x_i <- x_i + 1, 5 output additions
// f <- f + x_i, and the output complement. The first 35 are permutations of
// table positions and get compiled to byte lookup tables.
struct OrbitGenerators {
  std::vector<BitPerm32> perms;
  std::array<std::uint32_t, 5> projections{};

  OrbitGenerators() {
    std::array<std::uint8_t, 32> sigma{};
    auto add = [&](auto&& map) {
      for (int x = 0; x < 32; ++x)
        sigma[x] = static_cast<std::uint8_t>(map(static_cast<std::uint32_t>(x)));
      perms.push_back(BitPerm32::compile(sigma));
    };
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        add([&](std::uint32_t x) {
          const std::uint32_t bi = x >> i & 1, bj = x >> j & 1;
          return (x & ~((1u << i) | (1u << j))) | (bi << j) | (bj << i);
        });
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j)
          add([&](std::uint32_t x) { return x ^ ((x >> j & 1) << i); });
    for (int i = 0; i < 5; ++i)
      add([&](std::uint32_t x) { return x ^ (1u << i); });
    for (int i = 0; i < 5; ++i)
      projections[i] = static_cast<std::uint32_t>(kVarMask[i] & 0xffffffffull);
  }
};

inline const OrbitGenerators& orbit_generators() {
  static const OrbitGenerators g;
  return g;
}

} // namespace detail

// Breadth-first closure of a representative under the transform group.
// Throws LimitExceeded as soon as the orbit outgrows `limit`. The result is
// sorted ascending.
inline std::vector<std::uint32_t> orbit_enumerate(const TruthTable& rep,
                                                  std::size_t limit) {
  if (rep.arity() != 5)
    throw DomainError("orbit enumeration is defined for 5-variable functions");
  if (limit < 1)
    throw LimitExceeded("orbit exceeds limit of " + std::to_string(limit) +
                        " members");
  const auto& gens = detail::orbit_generators();
  detail::U32Set seen(limit);
  std::vector<std::uint32_t> out;
  out.reserve(limit);
  std::vector<std::uint32_t> frontier, next;

  const std::uint32_t start = rep.as_u32();
  seen.insert(start);
  out.push_back(start);
  frontier.push_back(start);

  auto visit = [&](std::uint32_t w) {
    if (seen.insert(w)) {
      if (out.size() >= limit)
        throw LimitExceeded("orbit exceeds limit of " + std::to_string(limit) +
                            " members");
      out.push_back(w);
      next.push_back(w);
    }
  };

  while (!frontier.empty()) {
    next.clear();
    for (const std::uint32_t w : frontier) {
      for (const auto& perm : gens.perms) visit(perm.apply(w));
      for (const std::uint32_t proj : gens.projections) visit(w ^ proj);
      visit(~w);
    }
    std::swap(frontier, next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace bfca
