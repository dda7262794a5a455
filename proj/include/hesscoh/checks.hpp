#ifndef HESSCOH_CHECKS_HPP
#define HESSCOH_CHECKS_HPP

#include <string>
#include <vector>

#include "hesscoh/cohomology.hpp"

namespace hesscoh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Size-parameterized verification bundles. Each sweeps every connected
// Hessenberg function of the given size unless noted.

// poincare_direct vs the minor recurrence (all h), and vs the closed form
// for h = (h1, n, ..., n).
CheckResult check_poincare_methods(int n);

// Linear cochain identities for every connected h.
CheckResult check_linear_relations(int n);

// Product identities for h = (2, n-1, ..., n-1, n, n).
CheckResult check_product_relations(int n);

// Every spanning class satisfies the edge condition.
CheckResult check_spanning_gkm(int n);

// The dot action permutes the spanning set according to
// sigma.x_k = x_k, sigma.y_{j,k} = y_{j,sigma(k)}, sigma.tau_A = tau_{sigma(A)}.
CheckResult check_dot_closure(int n);

// Label-preserving isomorphisms onto components of the minor's graph, for
// every r and every component.
CheckResult check_phi_r(int n);

// Kernel dimension equals the free-module count in every degree <= dim.
CheckResult check_kernel_oracle(int n);

// invariant_quotient_hilbert equals prod [h(j)-j+1]_q through degree dim.
CheckResult check_quotient_invariants(int n);

// Degree-two generation verdict equals the lollipop predicate. `rows`
// receives one line per h when non-null.
CheckResult check_classification(int n, GenMethod method = GenMethod::Auto,
                                 std::vector<std::string>* rows = nullptr);

// lollipop <=> no forbidden minor; flip is an involution preserving the
// Poincare polynomial.
CheckResult check_flip_and_minors(int n);

std::vector<CheckResult> run_size_checks(int n);

}  // namespace hesscoh

#endif
