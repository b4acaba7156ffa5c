#pragma once

// Cryptographic property predicates: balancedness, correlation immunity,
// SAC, propagation criterion, nonlinearity.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "bfca/transforms.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

inline bool is_balanced(const TruthTable& t) {
  return 2 * t.weight() == t.size();
}

// Largest k such that S_f(w) vanishes for all 1 <= weight(w) <= k. The two
// constant functions have an empty spectrum away from zero and so report
// order n; callers that need "balanced and immune" should use is_resilient.
inline int correlation_immunity_order(const TruthTable& t) {
  const WalshSpectrum s = walsh_spectrum(t);
  int order = t.arity();
  for (std::uint32_t w = 1; w < t.size(); ++w)
    if (s[w] != 0) order = std::min(order, std::popcount(w) - 1);
  return order;
}

inline bool is_resilient(const TruthTable& t, int k) {
  if (k < 1 || k > t.arity())
    throw DomainError("resiliency order " + std::to_string(k) +
                      " out of range for arity " + std::to_string(t.arity()));
  return is_balanced(t) && correlation_immunity_order(t) >= k;
}

// Largest k such that every derivative along 1 <= weight(a) <= k is
// balanced; 0 if some single-bit flip already fails.
inline int propagation_criterion_order(const TruthTable& t) {
  const std::int32_t half = static_cast<std::int32_t>(t.size() / 2);
  int order = t.arity();
  for (std::uint32_t a = 1; a < t.size(); ++a)
    if (detail::derivative_weight(t.words().data(), t.arity(), a) != half)
      order = std::min(order, std::popcount(a) - 1);
  return order;
}

inline bool satisfies_sac(const TruthTable& t) {
  const std::int32_t half = static_cast<std::int32_t>(t.size() / 2);
  for (int j = 0; j < t.arity(); ++j)
    if (detail::derivative_weight(t.words().data(), t.arity(), 1u << j) != half)
      return false;
  return true;
}

inline bool is_nonlinear(const TruthTable& t) {
  return algebraic_degree(t) >= 2;
}

struct PropertyProfile {
  bool balanced = false;
  bool ci1 = false;
  bool sac = false;
  int pc_order = 0;
  int degree = 0;
  bool nonlinear = false;

  bool operator==(const PropertyProfile&) const = default;
};

inline PropertyProfile property_profile(const TruthTable& t) {
  PropertyProfile p;
  p.balanced = is_balanced(t);
  p.ci1 = correlation_immunity_order(t) >= 1;
  p.pc_order = propagation_criterion_order(t);
  p.sac = p.pc_order >= 1;
  p.degree = algebraic_degree(t);
  p.nonlinear = p.degree >= 2;
  return p;
}

inline constexpr const char* kProfileCsvHeader =
    "hex,degree,nonlinear,balanced,ci1,sac,pc_order";

inline std::string profile_csv_row(const std::string& hex,
                                   const PropertyProfile& p) {
  std::string out = hex;
  out += ',';
  out += std::to_string(p.degree);
  out += p.nonlinear ? ",1" : ",0";
  out += p.balanced ? ",1" : ",0";
  out += p.ci1 ? ",1" : ",0";
  out += p.sac ? ",1" : ",0";
  out += ',';
  out += std::to_string(p.pc_order);
  return out;
}

} // namespace bfca
