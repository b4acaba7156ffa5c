#pragma once

// Spectral and polynomial views of a truth table: Walsh-Hadamard spectrum,
// algebraic normal form, autocorrelation.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bfca/detail/bits.hpp"
#include "bfca/error.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

struct WalshSpectrum {
  int arity = 0;
  std::vector<std::int32_t> coefficients; // entry w is S_f(w)

  std::int32_t operator[](std::uint32_t w) const { return coefficients[w]; }
  bool operator==(const WalshSpectrum&) const = default;
};

// S_f(w) = sum over x of (-1)^(f(x) + w.x), computed with the fast butterfly.
inline WalshSpectrum walsh_spectrum(const TruthTable& t) {
  WalshSpectrum s;
  s.arity = t.arity();
  s.coefficients.resize(t.size());
  for (std::uint32_t x = 0; x < t.size(); ++x)
    s.coefficients[x] = t.bit(x) ? -1 : 1;
  detail::fwht(s.coefficients);
  return s;
}

class AnfPolynomial {
public:
  explicit AnfPolynomial(int arity) : arity_(arity) {}

  static AnfPolynomial from_monomials(int arity,
                                      std::initializer_list<std::uint32_t> masks) {
    AnfPolynomial p(arity);
    for (std::uint32_t u : masks) p.coeff_[u >> 6] ^= 1ull << (u & 63);
    return p;
  }

  int arity() const { return arity_; }

  // Coefficient of the monomial whose variable set is the bits of u.
  bool coefficient(std::uint32_t u) const {
    return coeff_[u >> 6] >> (u & 63) & 1;
  }

  int degree() const { return detail::anf_degree(coeff_.data(), arity_); }

  std::vector<std::uint32_t> monomials() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < (1u << arity_); ++u)
      if (coefficient(u)) out.push_back(u);
    return out;
  }

  // Monomials ordered by their variable-index sequences (a missing variable
  // counts as infinity, so "x0x1" precedes "x0"), constant term last.
  std::string to_string() const {
    auto before = [](std::uint32_t a, std::uint32_t b) {
      for (;;) {
        const int ia = a ? std::countr_zero(a) : INT_MAX;
        const int ib = b ? std::countr_zero(b) : INT_MAX;
        if (ia != ib) return ia < ib;
        if (!a) return false;
        a &= a - 1;
        b &= b - 1;
      }
    };
    std::vector<std::uint32_t> terms;
    bool constant = false;
    for (std::uint32_t u : monomials()) {
      if (u == 0) constant = true;
      else terms.push_back(u);
    }
    std::sort(terms.begin(), terms.end(), before);
    std::string out;
    for (std::uint32_t u : terms) {
      if (!out.empty()) out += " + ";
      std::uint32_t m = u;
      while (m) {
        out += 'x';
        out += std::to_string(std::countr_zero(m));
        m &= m - 1;
      }
    }
    if (constant) out += out.empty() ? "1" : " + 1";
    if (out.empty()) out = "0";
    return out;
  }

  const std::array<std::uint64_t, detail::kTableWords>& words() const {
    return coeff_;
  }
  std::array<std::uint64_t, detail::kTableWords>& words() { return coeff_; }

  bool operator==(const AnfPolynomial&) const = default;

private:
  int arity_;
  std::array<std::uint64_t, detail::kTableWords> coeff_{};
};

// The Moebius transform is an involution, so both directions share it.
inline AnfPolynomial anf(const TruthTable& t) {
  AnfPolynomial p(t.arity());
  p.words() = t.words();
  detail::mobius_inplace(p.words().data(), t.arity());
  return p;
}

inline TruthTable from_anf(const AnfPolynomial& p) {
  auto words = p.words();
  detail::mobius_inplace(words.data(), p.arity());
  TruthTable t = TruthTable::zero(p.arity());
  for (std::uint32_t x = 0; x < t.size(); ++x)
    if (words[x >> 6] >> (x & 63) & 1) t.set_bit(x, true);
  return t;
}

inline int algebraic_degree(const TruthTable& t) {
  auto words = t.words();
  detail::mobius_inplace(words.data(), t.arity());
  return detail::anf_degree(words.data(), t.arity());
}

struct AutocorrelationSpectrum {
  int arity = 0;
  std::vector<std::int32_t> coefficients; // entry a is r_f(a)

  std::int32_t operator[](std::uint32_t a) const { return coefficients[a]; }
  bool operator==(const AutocorrelationSpectrum&) const = default;
};

// r_f(a) = 2^n - 2 * weight(D_a f). Tests cross-check this against the
// inverse-transformed squared Walsh spectrum.
inline AutocorrelationSpectrum autocorrelation(const TruthTable& t) {
  AutocorrelationSpectrum r;
  r.arity = t.arity();
  r.coefficients.resize(t.size());
  const auto n = static_cast<std::int32_t>(t.size());
  for (std::uint32_t a = 0; a < t.size(); ++a)
    r.coefficients[a] =
        n - 2 * detail::derivative_weight(t.words().data(), t.arity(), a);
  return r;
}

} // namespace bfca
