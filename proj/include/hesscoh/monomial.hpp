#ifndef HESSCOH_MONOMIAL_HPP
#define HESSCOH_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "hesscoh/rational.hpp"

namespace hesscoh {

// Monomials in up to 12 variables, packed 5 bits per exponent. Variable i
// (1-based) occupies bits [5(i-1), 5i), so the numeric order on the packed
// word is the colex order on exponent vectors.
using Mono = std::uint64_t;

constexpr int kMaxVars = 12;
constexpr int kMaxExp = 31;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (5 * (i - 1))) & 31u); }

inline Mono mono_set_exp(Mono m, int i, int e) {
  const int sh = 5 * (i - 1);
  return (m & ~(Mono(31) << sh)) | (Mono(e) << sh);
}

inline Mono mono_var(int i) { return Mono(1) << (5 * (i - 1)); }

inline int mono_total_degree(Mono m, int n) {
  int d = 0;
  for (int i = 1; i <= n; ++i) d += mono_exp(m, i);
  return d;
}

// Throws when an exponent field would overflow.
Mono mono_mul(Mono a, Mono b, int n);

std::vector<int> mono_unpack(Mono m, int n);
Mono mono_pack(const std::vector<int>& e);

// Number of degree-d monomials in n variables, C(d+n-1, n-1).
std::uint64_t mono_count(int n, int d);

// Dense colex rank among degree-d monomials in n variables, and its inverse.
std::uint32_t mono_rank_colex(Mono m, int n, int d);
Mono mono_unrank_colex(std::uint32_t rank, int n, int d);

// All degree-d monomials in colex order.
std::vector<Mono> monomials_of_degree(int n, int d);

std::uint64_t binomial_u64(int n, int k);

}  // namespace hesscoh

#endif
