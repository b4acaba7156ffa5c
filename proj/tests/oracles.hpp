#pragma once

// Independent reference implementations used only for testing. Each one
// recomputes a quantity by the most literal method available, sharing no
// code with the fast paths it checks.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "bfca/cellular.hpp"
#include "bfca/transforms.hpp"
#include "bfca/truth_table.hpp"

namespace oracles {

// Walsh coefficient by the defining double loop over all inputs.
inline std::int32_t walsh_naive(const bfca::TruthTable& t, std::uint32_t w) {
  std::int32_t sum = 0;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    const int sign = t.eval(x) ^ (std::popcount(w & x) & 1);
    sum += sign ? -1 : 1;
  }
  return sum;
}

// Evaluates an ANF at one point by literally summing its monomials: the
// monomial with variable set u is 1 at x iff u is a subset of x.
inline int anf_eval_naive(const bfca::AnfPolynomial& p, std::uint32_t x) {
  int acc = 0;
  for (std::uint32_t u = 0; u < (1u << p.arity()); ++u)
    if (p.coefficient(u) && (u & x) == u) acc ^= 1;
  return acc;
}

// Autocorrelation through the spectral route: the inverse transform of the
// squared Walsh spectrum, divided by 2^n.
inline std::int32_t autocorr_spectral(const bfca::TruthTable& t,
                                      std::uint32_t a) {
  const bfca::WalshSpectrum s = bfca::walsh_spectrum(t);
  std::int64_t sum = 0;
  for (std::uint32_t w = 0; w < t.size(); ++w) {
    const std::int64_t sq =
        static_cast<std::int64_t>(s[w]) * static_cast<std::int64_t>(s[w]);
    sum += (std::popcount(w & a) & 1) ? -sq : sq;
  }
  return static_cast<std::int32_t>(sum / static_cast<std::int64_t>(t.size()));
}

// Correlation immunity by the direct statistical test: f is immune at
// order k iff for every set of k input variables and every assignment to
// them, the number of ones of f restricted to that slice is weight / 2^k.
inline bool ci_direct(const bfca::TruthTable& t, int k) {
  const int n = t.arity();
  const std::uint32_t size = t.size();
  const std::uint32_t weight = t.weight();
  for (std::uint32_t subset = 0; subset < size; ++subset) {
    if (std::popcount(subset) != k) continue;
    std::vector<std::uint32_t> ones(1u << k, 0);
    for (std::uint32_t x = 0; x < size; ++x) {
      if (!t.eval(x)) continue;
      std::uint32_t v = 0;
      int bit = 0;
      for (int j = 0; j < n; ++j)
        if (subset >> j & 1) {
          v |= static_cast<std::uint32_t>(x >> j & 1) << bit;
          ++bit;
        }
      ++ones[v];
    }
    for (const std::uint32_t c : ones)
      if (c * (1u << k) != weight) return false;
  }
  return true;
}

inline int ci_order_direct(const bfca::TruthTable& t) {
  int order = 0;
  for (int k = 1; k <= t.arity(); ++k) {
    if (!ci_direct(t, k)) break;
    order = k;
  }
  return order;
}

// 9-variable extension computed cell by cell with the generic stepper:
// lay the input bits on a 9-cell row, run two truncating steps, read the
// single surviving cell.
inline bfca::TruthTable extend_via_ca(const bfca::TruthTable& rule) {
  bfca::TruthTable g = bfca::TruthTable::zero(9);
  for (std::uint32_t v = 0; v < 512; ++v) {
    bfca::CAState s;
    s.boundary = bfca::Boundary::truncating;
    s.rule = rule;
    s.cells.resize(9);
    for (int j = 0; j < 9; ++j)
      s.cells[j] = static_cast<std::uint8_t>(v >> j & 1);
    s = ca_step(ca_step(s));
    if (s.cells.size() != 1) std::abort();
    if (s.cells[0]) g.set_bit(v, true);
  }
  return g;
}

// Same construction on an instrumented tape that records which absolute
// cell positions the windows touch, for checking that nothing outside
// cells 0..8 is ever read.
inline bfca::TruthTable extend_instrumented(const bfca::TruthTable& rule,
                                            int& out_of_range_reads) {
  out_of_range_reads = 0;
  bfca::TruthTable g = bfca::TruthTable::zero(9);
  for (std::uint32_t v = 0; v < 512; ++v) {
    auto read = [&](const std::vector<std::uint8_t>& tape, int pos) {
      if (pos < 0 || pos >= static_cast<int>(tape.size())) {
        ++out_of_range_reads;
        return std::uint8_t{0};
      }
      return tape[pos];
    };
    std::vector<std::uint8_t> tape(9);
    for (int j = 0; j < 9; ++j)
      tape[j] = static_cast<std::uint8_t>(v >> j & 1);
    std::vector<std::uint8_t> mid(5);
    for (int i = 2; i <= 6; ++i) {
      std::uint32_t idx = 0;
      for (int o = -2; o <= 2; ++o)
        idx |= static_cast<std::uint32_t>(read(tape, i + o)) << (2 - o);
      mid[i - 2] = static_cast<std::uint8_t>(rule.bit(idx));
    }
    std::uint32_t idx = 0;
    for (int o = -2; o <= 2; ++o)
      idx |= static_cast<std::uint32_t>(read(mid, 2 + o)) << (2 - o);
    if (rule.bit(idx)) g.set_bit(v, true);
  }
  return g;
}

} // namespace oracles
