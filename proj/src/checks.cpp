#include "hesscoh/checks.hpp"

#include <sstream>

namespace hesscoh {

namespace {

std::vector<HessenbergFunction> connected_of(int n) { return enumerate_hessenberg(n, true); }

CheckResult pass(const std::string& name, const std::string& detail = "") {
  return {name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

}  // namespace

CheckResult check_poincare_methods(int n) {
  const std::string name = "poincare-methods n=" + std::to_string(n);
  for (const auto& h : enumerate_hessenberg(n, false)) {
    if (poincare_direct(h) != poincare_recursive(h))
      return fail(name, "recurrence mismatch at h=" + h.to_string());
  }
  for (int h1 = 2; h1 <= n; ++h1) {
    std::vector<int> v(n, n);
    v[0] = h1;
    const auto h = HessenbergFunction::validate(v);
    if (poincare_direct(h) != poincare_h1_closed(n, h1))
      return fail(name, "closed form mismatch at h=" + h.to_string());
  }
  return pass(name);
}

CheckResult check_linear_relations(int n) {
  const std::string name = "linear-relations n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    const auto rep = verify_linear_relations(h);
    if (!rep.ok)
      return fail(name, "h=" + h.to_string() + " violates " + rep.failed_identity +
                            " at w=" + rep.witness.value_or("?"));
  }
  return pass(name);
}

CheckResult check_product_relations(int n) {
  const std::string name = "product-relations n=" + std::to_string(n);
  const auto rep = verify_product_relations(n);
  if (!rep.ok)
    return fail(name, "violates " + rep.failed_identity + " at w=" + rep.witness.value_or("?"));
  return pass(name, std::to_string(rep.identities_checked) + " identities");
}

CheckResult check_spanning_gkm(int n) {
  const std::string name = "spanning-gkm n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    try {
      degree2_spanning_set(h);  // throws when a member fails the edge test
    } catch (const Error& e) {
      return fail(name, "h=" + h.to_string() + ": " + e.what());
    }
  }
  return pass(name);
}

CheckResult check_dot_closure(int n) {
  const std::string name = "dot-closure n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    const auto specs = degree2_generator_specs(h);
    std::vector<Cochain> classes;
    for (const auto& s : specs) classes.push_back(build_class(n, s));
    Perm sigma = Perm::identity(n);
    do {
      for (std::size_t i = 0; i < specs.size(); ++i) {
        ClassSpec mapped = specs[i];
        switch (specs[i].kind) {
          case ClassSpec::Kind::X: break;
          case ClassSpec::Kind::Y: mapped.k = sigma(specs[i].k); break;
          case ClassSpec::Kind::TAU: {
            std::vector<int> A;
            for (int a : specs[i].A) A.push_back(sigma(a));
            std::sort(A.begin(), A.end());
            mapped.A = std::move(A);
            break;
          }
          default: break;
        }
        if (!(dot_action(sigma, classes[i]) == build_class(n, mapped)))
          return fail(name, "h=" + h.to_string() + " sigma=" + sigma.one_line() + " on " +
                                specs[i].to_string());
      }
      // constants move by the variable substitution
      const Cochain t1 = Cochain::constant(n, MultiPoly::var(n, 1));
      if (!(dot_action(sigma, t1) == Cochain::constant(n, MultiPoly::var(n, sigma(1)))))
        return fail(name, "constant moved wrongly under sigma=" + sigma.one_line());
    } while (sigma.next_lex());
  }
  return pass(name);
}

CheckResult check_phi_r(int n) {
  const std::string name = "phi-r n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    for (int r = 1; r <= n; ++r) {
      const auto comps = fixed_level_components(h, r);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!phi_r_check(h, r, comps[c]))
          return fail(name, "h=" + h.to_string() + " r=" + std::to_string(r) +
                                " component " + std::to_string(c));
      }
    }
  }
  return pass(name);
}

CheckResult check_kernel_oracle(int n) {
  const std::string name = "kernel-oracle n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    const int D = dimension(h);
    for (int d = 0; d <= D; ++d) {
      const auto basis = equivariant_kernel_basis(h, d);
      const long long expect = equivariant_rank_oracle(h, d);
      if (static_cast<long long>(basis.rank()) != expect)
        return fail(name, "h=" + h.to_string() + " d=" + std::to_string(d) + ": kernel " +
                              std::to_string(basis.rank()) + " vs oracle " +
                              std::to_string(expect));
    }
  }
  return pass(name);
}

CheckResult check_quotient_invariants(int n) {
  const std::string name = "quotient-invariants n=" + std::to_string(n);
  for (const auto& h : connected_of(n)) {
    const int D = dimension(h);
    const QPoly got = invariant_quotient_hilbert(h, D);
    const QPoly want = hilb_invariants(h).truncated(D + 1);
    if (got != want)
      return fail(name, "h=" + h.to_string() + ": " + got.pretty() + " vs " + want.pretty());
  }
  return pass(name);
}

CheckResult check_classification(int n, GenMethod method, std::vector<std::string>* rows) {
  const std::string name = "classification n=" + std::to_string(n);
  int generated = 0;
  for (const auto& h : connected_of(n)) {
    const auto report = is_degree2_generated(h, method);
    const bool lolli = lollipop_form(h).has_value();
    if (rows) {
      std::ostringstream os;
      os << h.to_string() << " generated=" << (report.generated ? "yes" : "no")
         << " lollipop=" << (lolli ? "yes" : "no");
      rows->push_back(os.str());
    }
    if (report.generated != lolli)
      return fail(name, "h=" + h.to_string() + " verdict " +
                            (report.generated ? "true" : "false") + " but lollipop " +
                            (lolli ? "present" : "absent"));
    if (report.generated) ++generated;
  }
  return pass(name, std::to_string(generated) + " generated");
}

CheckResult check_flip_and_minors(int n) {
  const std::string name = "flip-and-minors n=" + std::to_string(n);
  for (const auto& h : enumerate_hessenberg(n, false)) {
    if (!(flip(flip(h)) == h)) return fail(name, "flip not an involution at " + h.to_string());
    if (poincare_direct(flip(h)) != poincare_direct(h))
      return fail(name, "flip changes the Poincare polynomial at " + h.to_string());
  }
  if (n >= 2) {
    for (const auto& h : connected_of(n)) {
      const bool lolli = lollipop_form(h).has_value();
      const bool forbidden = has_forbidden_minor(h);
      if (lolli == forbidden)
        return fail(name, "h=" + h.to_string() + " lollipop=" + (lolli ? "yes" : "no") +
                              " forbidden-minor=" + (forbidden ? "yes" : "no"));
    }
  }
  return pass(name);
}

std::vector<CheckResult> run_size_checks(int n) {
  std::vector<CheckResult> out;
  out.push_back(check_poincare_methods(n));
  out.push_back(check_flip_and_minors(n));
  if (n >= 2) out.push_back(check_linear_relations(n));
  if (n >= 4 && n <= 8) out.push_back(check_product_relations(n));
  if (n <= 5) out.push_back(check_spanning_gkm(n));
  if (n <= 4) out.push_back(check_dot_closure(n));
  if (n <= 4) out.push_back(check_phi_r(n));
  if (n <= 4) out.push_back(check_kernel_oracle(n));
  if (n <= 5) out.push_back(check_quotient_invariants(n));
  if (n >= 2 && n <= 5) out.push_back(check_classification(n));
  return out;
}

}  // namespace hesscoh
