#include <doctest.h>

#include <random>

#include "hesscoh/cohomology.hpp"

using namespace hesscoh;

namespace {

HessenbergFunction H(std::vector<int> v) { return HessenbergFunction::validate(std::move(v)); }

MultiPoly t(int n, int i) { return MultiPoly::var(n, i); }

}  // namespace

TEST_CASE("class spec serialization round trip") {
  for (const char* s : {"x:2", "y:3,5", "ystar:8,11", "tau:{1,4,5}", "rho:3"})
    CHECK(ClassSpec::parse(s).to_string() == s);
  CHECK_THROWS_AS(ClassSpec::parse("z:1"), Error);
  CHECK_THROWS_AS(build_class(3, ClassSpec::x(4)), Error);
  CHECK_THROWS_AS(build_class(3, ClassSpec::tau({1, 2, 3})), Error);
  CHECK_THROWS_AS(build_class(3, ClassSpec::y(3, 1)), Error);
}

TEST_CASE("class values from the defining formulas") {
  const int n = 3;
  const auto w132 = Perm::from_one_line({1, 3, 2});
  const auto w213 = Perm::from_one_line({2, 1, 3});
  const auto w123 = Perm::from_one_line({1, 2, 3});

  CHECK(build_class(n, ClassSpec::x(2)).at(w132) == t(n, 3));

  const auto tau1 = build_class(n, ClassSpec::tau({1}));
  CHECK(tau1.at(w132) == t(n, 1) - t(n, 3));
  CHECK(tau1.at(w213).is_zero());

  const auto rho3 = build_class(n, ClassSpec::rho(3));
  CHECK(rho3.at(w123) == t(n, 2) - t(n, 3));
  CHECK(rho3.at(w132).is_zero());

  // y and ystar case splits
  const auto y12 = build_class(n, ClassSpec::y(1, 2));
  CHECK(y12.at(w213) == t(n, 2) - t(n, 1));
  CHECK(y12.at(w123).is_zero());
  const auto ys32 = build_class(n, ClassSpec::ystar(3, 2));
  CHECK(ys32.at(w132) == t(n, 2) - t(n, 3));  // 2 in {w(3)}, w(2) = 3
  CHECK(ys32.at(w123).is_zero());             // 2 not in {w(3)} = {3}
}

TEST_CASE("membership side conditions") {
  CHECK(membership_conditions(H({2, 3, 3}), ClassSpec::tau({1})));
  CHECK_FALSE(membership_conditions(H({3, 3, 3}), ClassSpec::tau({1})));
  // and the flag really rejects tau on the edge side too
  CHECK_FALSE(is_gkm_class(H({3, 3, 3}), build_class(3, ClassSpec::tau({1}))));

  CHECK(membership_conditions(H({2, 4, 4, 5, 5}), ClassSpec::rho(2)));
  CHECK_FALSE(membership_conditions(H({2, 3, 4, 5, 5}), ClassSpec::rho(2)));
  CHECK(membership_conditions(H({2, 3, 3}), ClassSpec::x(1)));

  const auto h11 = H({4, 4, 4, 5, 6, 7, 11, 11, 11, 11, 11});
  CHECK(membership_conditions(h11, ClassSpec::y(3, 2)));
  CHECK_FALSE(membership_conditions(h11, ClassSpec::y(4, 2)));
  CHECK(membership_conditions(h11, ClassSpec::ystar(8, 1)));  // h*(8) = 7
  CHECK(membership_conditions(h11, ClassSpec::tau({1, 3, 5, 7})));
  CHECK_FALSE(membership_conditions(h11, ClassSpec::tau({1, 2})));
}

TEST_CASE("membership implies the edge condition, all specs, n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& h : enumerate_hessenberg(n, true)) {
      const auto g = build_graph(h);
      std::vector<ClassSpec> pool;
      for (int k = 1; k <= n; ++k) pool.push_back(ClassSpec::x(k));
      for (int j = 1; j <= n - 1; ++j)
        for (int k = 1; k <= n; ++k) pool.push_back(ClassSpec::y(j, k));
      for (int i = 2; i <= n; ++i)
        for (int k = 1; k <= n; ++k) pool.push_back(ClassSpec::ystar(i, k));
      for (int k = 1; k <= n; ++k) pool.push_back(ClassSpec::rho(k));
      pool.push_back(ClassSpec::tau({1}));
      pool.push_back(ClassSpec::tau({2, 3}));
      for (const auto& spec : pool)
        if (membership_conditions(h, spec)) CHECK(is_gkm_class(g, build_class(n, spec)));
    }
  }
}

TEST_CASE("ystar can replace y in the double-tail generating set") {
  // y_{n-2,k} and y*_{n,k} differ by a polynomial in x and constants
  const int n = 5;
  const auto h = lollipop_pn_function(n);
  const auto g = build_graph(h);
  for (int k = 1; k <= n; ++k) {
    const auto ys = build_class(n, ClassSpec::ystar(n, k));
    CHECK(membership_conditions(h, ClassSpec::ystar(n, k)));  // h*(n) = n-1
    CHECK(is_gkm_class(g, ys));
  }
}

TEST_CASE("linear relations, all connected h, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& h : enumerate_hessenberg(n, true)) {
      const auto rep = verify_linear_relations(h);
      CHECK(rep.ok);
      if (!rep.ok)
        MESSAGE("h=", h.to_string(), " failed ", rep.failed_identity, " at ",
                rep.witness.value_or("?"));
    }
  }
}

TEST_CASE("linear relations catch a planted violation") {
  // sanity that the checker is not vacuous: constants are not x-sums at n=2
  // with a wrong h would be artificial; instead check a disconnected reject
  CHECK_THROWS_AS(verify_linear_relations(H({1, 2, 3})), Error);
}

TEST_CASE("materialized sum identities over full subset families, n = 5") {
  const int n = 5;
  const auto h = H({2, 4, 4, 5, 5});
  const auto be = bottom_and_ell_sets(h);
  REQUIRE(be.bottom == std::set<int>{3});
  REQUIRE(be.ell == std::set<int>{1, 4});

  // sum over all singletons: x_1 - x_2
  Cochain sum_tau(n, 1);
  for (int k = 1; k <= n; ++k) sum_tau = sum_tau + build_class(n, ClassSpec::tau({k}));
  CHECK(sum_tau == build_class(n, ClassSpec::x(1)) - build_class(n, ClassSpec::x(2)));

  // sum over k of y_{3,k}: x_1 + x_2 + x_3 - 3 x_4
  Cochain sum_y(n, 1);
  for (int k = 1; k <= n; ++k) sum_y = sum_y + build_class(n, ClassSpec::y(3, k));
  Cochain rhs = build_class(n, ClassSpec::x(1)) + build_class(n, ClassSpec::x(2)) +
                build_class(n, ClassSpec::x(3)) -
                build_class(n, ClassSpec::x(4)) * Rat(3);
  CHECK(sum_y == rhs);

  // sum over rho: x_4 - x_5
  Cochain sum_rho(n, 1);
  for (int k = 1; k <= n; ++k) sum_rho = sum_rho + build_class(n, ClassSpec::rho(k));
  CHECK(sum_rho == build_class(n, ClassSpec::x(4)) - build_class(n, ClassSpec::x(5)));

  // (y_k - y_l) - (rho_k - rho_l) is the constant t_k - t_l
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      Cochain lhs = (build_class(n, ClassSpec::y(3, k)) - build_class(n, ClassSpec::y(3, l))) -
                    (build_class(n, ClassSpec::rho(k)) - build_class(n, ClassSpec::rho(l)));
      CHECK(lhs == Cochain::constant(n, t(n, k) - t(n, l)));
    }
}

TEST_CASE("sampled linear identity at n = 11") {
  // the size-11 staircase-and-block shape; full sweeps are CLI territory
  const auto h = H({4, 4, 4, 5, 6, 7, 11, 11, 11, 11, 11});
  const int n = 11;
  std::mt19937_64 rng(2024);
  std::vector<int> line(n);
  for (int trial = 0; trial < 50000; ++trial) {
    for (int i = 0; i < n; ++i) line[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
      std::swap(line[i], line[rng() % (i + 1)]);
    const Perm w = Perm::from_one_line(line);
    // sum_k y_{3,k}(w) = (t_{w(1)}+t_{w(2)}+t_{w(3)}) - 3 t_{w(4)}
    std::vector<long> lhs(n, 0), rhs(n, 0);
    for (int k = 1; k <= n; ++k)
      if (w(1) == k || w(2) == k || w(3) == k) {
        lhs[k - 1] += 1;
        lhs[w(4) - 1] -= 1;
      }
    for (int p = 1; p <= 3; ++p) rhs[w(p) - 1] += 1;
    rhs[w(4) - 1] -= 3;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("product relations for the double-tail shape") {
  for (int n : {4, 5}) {
    const auto rep = verify_product_relations(n);
    CHECK(rep.ok);
    if (!rep.ok) MESSAGE("n=", n, " failed ", rep.failed_identity);
  }
}

TEST_CASE("product relation spot checks as cochains, n = 5") {
  const int n = 5;
  const auto x1 = build_class(n, ClassSpec::x(1));
  const auto x2 = build_class(n, ClassSpec::x(2));
  const auto tau1 = build_class(n, ClassSpec::tau({1}));
  const auto tau2 = build_class(n, ClassSpec::tau({2}));
  const auto rho1 = build_class(n, ClassSpec::rho(1));

  CHECK(tau1 * tau1 == (x1 - x2) * tau1);
  CHECK((tau1 * tau2).is_zero());
  CHECK((tau1 * rho1).is_zero());
  CHECK(((x1 - Cochain::constant(n, t(n, 2))) * tau2).is_zero());
}

TEST_CASE("dot action on the named classes") {
  const int n = 4;
  Perm sigma = Perm::identity(n);
  do {
    for (int k = 1; k <= n; ++k) {
      CHECK(dot_action(sigma, build_class(n, ClassSpec::x(k))) ==
            build_class(n, ClassSpec::x(k)));
      CHECK(dot_action(sigma, build_class(n, ClassSpec::rho(k))) ==
            build_class(n, ClassSpec::rho(sigma(k))));
      for (int j = 1; j <= n - 1; ++j)
        CHECK(dot_action(sigma, build_class(n, ClassSpec::y(j, k))) ==
              build_class(n, ClassSpec::y(j, sigma(k))));
    }
    std::vector<std::vector<int>> subsets = {{1}, {2}, {1, 3}, {2, 4}, {1, 2, 3}};
    for (const auto& A : subsets) {
      std::vector<int> sA;
      for (int a : A) sA.push_back(sigma(a));
      std::sort(sA.begin(), sA.end());
      CHECK(dot_action(sigma, build_class(n, ClassSpec::tau(A))) ==
            build_class(n, ClassSpec::tau(sA)));
    }
  } while (sigma.next_lex());
}

TEST_CASE("dot identities at n = 5, random sigma") {
  const int n = 5;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const Perm sigma = Perm::from_lex_rank(rng() % factorial(n), n);
    const int k = 1 + static_cast<int>(rng() % n);
    CHECK(dot_action(sigma, build_class(n, ClassSpec::x(k))) ==
          build_class(n, ClassSpec::x(k)));
    CHECK(dot_action(sigma, build_class(n, ClassSpec::tau({k}))) ==
          build_class(n, ClassSpec::tau({sigma(k)})));
  }
}
