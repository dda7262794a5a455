#ifndef HESSCOH_SERIES_HPP
#define HESSCOH_SERIES_HPP

#include "hesscoh/hessenberg.hpp"
#include "hesscoh/permutation.hpp"
#include "hesscoh/qpoly.hpp"

namespace hesscoh {

// #{ j < i : w(j) > w(i), i <= h(j) }; the inversion statistic cut off by h.
int ell_h(const HessenbergFunction& h, const Perm& w);

// Coefficient of q^k counts permutations with ell_h = k. Valid for
// disconnected h as well.
QPoly poincare_direct(const HessenbergFunction& h, unsigned threads = 0);

// Same polynomial through the minor recurrence
//   Poin(h) = sum_j q^{h(j)-j} Poin(h^j),
// memoized over the minor closure; disconnected minors are evaluated by the
// permutation statistic directly.
QPoly poincare_recursive(const HessenbergFunction& h);

// Closed form for h = (h1, n, ..., n):
//   [h1]_q [n-1]_q! + (n-1) q^{h1-1} [n-h1]_q [n-2]_q!
QPoly poincare_h1_closed(int n, int h1);

// F_n = closed form at h1 = 2.
QPoly lollipop_Fn(int n);

// P_n for h = (2, n-1, ..., n-1, n, n): computed from the statistic at n = 4,
// by the recurrence for n >= 5.
QPoly lollipop_Pn(int n);

// The associated function (2, n-1, ..., n-1, n, n) itself.
HessenbergFunction lollipop_pn_function(int n);

// Q_n = (1 + 2n q + n(n-1) q^2) [n-2]_q! + (n(n-3)/2) q^{n-3}.
QPoly Qn(int n);

// Hilbert series of the invariant subring: prod_{j=1}^{n-1} [h(j)-j+1]_q.
QPoly hilb_invariants(const HessenbergFunction& h);

struct SubringBounds {
  QPoly a;         // (1+q)^2 [n-2]_q!
  QPoly b;         // (n-1)(q+q^2) [n-2]_q!
  QPoly c;         // same as b
  QPoly d;         // (n^2-3n+1) q^2 [n-2]_q!
  QPoly combined;  // (1 + 2n q + n(n-1) q^2) [n-2]_q!
};
SubringBounds subring_upper_bound(int n);

}  // namespace hesscoh

#endif
