// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails. Everything is exact arithmetic;
// there are no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "hesscoh/checks.hpp"
#include "hesscoh/cohomology.hpp"

using namespace hesscoh;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << num << ": " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

HessenbergFunction H(std::vector<int> v) { return HessenbergFunction::validate(std::move(v)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Exhaustive classification at n = 4, with the expected verdict table.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  std::vector<std::string> generated, not_generated;
  for (const auto& h : enumerate_hessenberg(4, true)) {
    const auto rep = is_degree2_generated(h);
    const bool lolli = lollipop_form(h).has_value();
    if (rep.generated != lolli) {
      pass = false;
      detail = "verdict/lollipop mismatch at " + h.to_string();
    }
    (rep.generated ? generated : not_generated).push_back(h.to_string());
  }
  const std::vector<std::string> want_gen = {"2,3,4,4", "2,4,4,4", "3,3,4,4", "4,4,4,4"};
  const std::vector<std::string> want_not = {"3,4,4,4"};
  if (generated != want_gen || not_generated != want_not) {
    pass = false;
    detail = "unexpected verdict table";
  }
  std::ostringstream os;
  os << generated.size() << " generated, " << not_generated.size() << " not, "
     << seconds_since(t0) << "s";
  report(1, "classification at n=4 matches the two-parameter family", pass,
         detail.empty() ? os.str() : detail);
}

// 2. Exhaustive classification at n = 5; the size gate must not fire.
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  int count = 0, generated = 0;
  try {
    for (const auto& h : enumerate_hessenberg(5, true)) {
      const auto rep = is_degree2_generated(h);
      const bool lolli = lollipop_form(h).has_value();
      ++count;
      if (rep.generated) ++generated;
      if (rep.generated != lolli) {
        pass = false;
        detail = "verdict/lollipop mismatch at " + h.to_string();
        break;
      }
    }
    if (count != 14) {
      pass = false;
      detail = "expected 14 connected functions, saw " + std::to_string(count);
    }
  } catch (const Error& e) {
    pass = false;
    detail = e.what();
  }
  std::ostringstream os;
  os << count << " functions, " << generated << " generated, " << seconds_since(t0) << "s";
  report(2, "classification at n=5 matches the two-parameter family", pass,
         detail.empty() ? os.str() : detail);
}

// 3. The P and Q series: exact small values, the congruence, and agreement
//    with the permutation statistic.
void criterion3() {
  bool pass = true;
  std::string detail;
  if (lollipop_Pn(4).serialize() != "1,11,11,1") {
    pass = false;
    detail = "P_4 = " + lollipop_Pn(4).serialize();
  }
  if (Qn(4).serialize() != "1,11,20,12") {
    pass = false;
    detail = "Q_4 = " + Qn(4).serialize();
  }
  for (int n = 4; n <= 8 && pass; ++n)
    if (!lollipop_Pn(n).congruent_mod_qk(Qn(n), n - 2)) {
      pass = false;
      detail = "P/Q congruence fails at n=" + std::to_string(n);
    }
  for (int n = 4; n <= 7 && pass; ++n)
    if (lollipop_Pn(n) != poincare_direct(lollipop_pn_function(n))) {
      pass = false;
      detail = "recurrence vs statistic at n=" + std::to_string(n);
    }
  report(3, "P_4, Q_4 exact; P_n = Q_n up to degree n-3 (n<=8); P_n exact (n<=7)", pass,
         detail);
}

// 4. The three Poincare methods agree wherever defined, n <= 6.
void criterion4() {
  bool pass = true;
  std::string detail;
  for (int n = 1; n <= 6 && pass; ++n) {
    const auto r = check_poincare_methods(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  report(4, "poincare_direct = poincare_recursive (n<=6) and = closed form on (h1,n,..,n)",
         pass, detail);
}

// 5. The Hilbert-series deficit for h = (2,4,4,5,5).
void criterion5() {
  bool pass = true;
  std::string detail;
  const auto h = H({2, 4, 4, 5, 5});
  const QPoly sub = subring_hilbert(h, 2);
  const Int b4 = poincare_direct(h).coeff(2);
  if (!(sub.coeff(2) <= 42)) {
    pass = false;
    detail = "subring q^2 coefficient is " + sub.coeff(2).get_str();
  }
  if (!(b4 - sub.coeff(2) >= 5)) {
    pass = false;
    detail = "deficit is " + Int(b4 - sub.coeff(2)).get_str();
  }
  const auto rep = is_degree2_generated(h);
  if (rep.generated || rep.degrees.empty() || rep.degrees.back().d != 2 ||
      rep.degrees.back().ok) {
    pass = false;
    detail = "checker did not fail first at cohomological degree 4";
  }
  std::ostringstream os;
  os << "subring q^2 = " << sub.coeff(2).get_str() << ", b_4 = " << b4.get_str()
     << ", first failure 2d = " << (rep.degrees.empty() ? -1 : 2 * rep.degrees.back().d);
  report(5, "deficit at (2,4,4,5,5): subring q^2 <= 42, b_4 deficit >= 5, fails at degree 4",
         pass, detail.empty() ? os.str() : detail);
}

// 6. Relation suites.
void criterion6() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 5 && pass; ++n) {
    const auto r = check_linear_relations(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  for (int n = 4; n <= 6 && pass; ++n) {
    const auto r = check_product_relations(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  report(6, "linear relations (n<=5) and product relations (n=4,5,6), exact", pass, detail);
}

// 7. Graph shapes, spanning-set membership, dot closure.
void criterion7() {
  bool pass = true;
  std::string detail;
  const auto cyc = build_graph(H({2, 3, 3}));
  if (!(cyc.vertex_count() == 6 && cyc.edge_count() == 6 && cyc.is_regular(2) &&
        cyc.is_cycle())) {
    pass = false;
    detail = "(2,3,3) graph is not a 2-regular 6-cycle";
  }
  const auto flag = build_graph(H({3, 3, 3}));
  if (!(flag.edge_count() == 9 && flag.is_regular(3))) {
    pass = false;
    detail = "(3,3,3) graph is not 3-regular with 9 edges";
  }
  for (int n = 2; n <= 5 && pass; ++n) {
    const auto r = check_spanning_gkm(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  for (int n = 2; n <= 4 && pass; ++n) {
    const auto r = check_dot_closure(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  report(7, "graph shapes at n=3; spanning classes are GKM (n<=5); dot closure (n<=4)", pass,
         detail);
}

// 8. The level-set isomorphisms.
void criterion8() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 4 && pass; ++n) {
    const auto r = check_phi_r(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  report(8, "w -> w c_r is a labeled isomorphism onto a minor component (n<=4)", pass, detail);
}

// 9. Kernel dimensions against the free-module count.
void criterion9() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 4 && pass; ++n) {
    const auto r = check_kernel_oracle(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  report(9, "kernel dimension equals the rank oracle (n<=4, all degrees)", pass, detail);
}

// 10. The invariant-ring Hilbert series.
void criterion10() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 5 && pass; ++n) {
    const auto r = check_quotient_invariants(n);
    if (!r.pass) {
      pass = false;
      detail = r.detail;
    }
  }
  if (pass) {
    const auto h = H({2, 4, 4, 5, 5});
    const QPoly want = q_int(2) * q_int(2) * q_fact(3);
    if (invariant_quotient_hilbert(h, 5) != want.truncated(6)) {
      pass = false;
      detail = "(2,4,4,5,5) quotient differs from (1+q)^2 [3]_q!";
    }
  }
  report(10, "invariant quotient equals prod [h(j)-j+1]_q (n<=5)", pass, detail);
}

// 11. Combinatorial closure and the flip.
void criterion11() {
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 6 && pass; ++n) {
    for (const auto& h : enumerate_hessenberg(n, true))
      if (lollipop_form(h).has_value() != !has_forbidden_minor(h)) {
        pass = false;
        detail = "equivalence fails at " + h.to_string();
        break;
      }
  }
  for (int n = 1; n <= 6 && pass; ++n) {
    for (const auto& h : enumerate_hessenberg(n, false)) {
      if (!(flip(flip(h)) == h)) {
        pass = false;
        detail = "flip involution fails at " + h.to_string();
        break;
      }
      if (poincare_direct(flip(h)) != poincare_direct(h)) {
        pass = false;
        detail = "flip changes the series at " + h.to_string();
        break;
      }
    }
  }
  report(11, "lollipop <=> no forbidden minor (n<=6); flip involution preserves the series",
         pass, detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "  (" << seconds_since(t0) << "s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
