#include "hesscoh/series.hpp"

#include <map>
#include <mutex>

#include "hesscoh/parallel.hpp"

namespace hesscoh {

int ell_h(const HessenbergFunction& h, const Perm& w) {
  const int n = h.size();
  int c = 0;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= h(j); ++i)
      if (w(j) > w(i)) ++c;
  return c;
}

QPoly poincare_direct(const HessenbergFunction& h, unsigned threads) {
  const int n = h.size();
  const int dmax = box_count_below_diagonal(h);
  if (n <= 7 || threads == 1) {
    std::vector<Int> c(dmax + 1, Int(0));
    for_each_permutation(n, [&](const Perm& w) { c[ell_h(h, w)] += 1; });
    return QPoly(std::move(c));
  }
  // Partition the sweep by the first two one-line entries.
  std::vector<std::vector<long>> partial(n * n, std::vector<long>(dmax + 1, 0));
  parallel_for(0, static_cast<std::size_t>(n * n), [&](std::size_t blk) {
    const int a = static_cast<int>(blk) / n + 1, b = static_cast<int>(blk) % n + 1;
    if (a == b) return;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != a && v != b) rest.push_back(v);
    auto& acc = partial[blk];
    std::vector<int> line(n);
    line[0] = a;
    line[1] = b;
    do {
      for (int i = 2; i < n; ++i) line[i] = rest[i - 2];
      acc[ell_h(h, Perm::from_one_line(line))] += 1;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }, threads);
  std::vector<Int> c(dmax + 1, Int(0));
  for (const auto& acc : partial)
    for (int k = 0; k <= dmax; ++k) c[k] += acc[k];
  return QPoly(std::move(c));
}

namespace {

QPoly poincare_rec_memo(const HessenbergFunction& h,
                        std::map<std::vector<int>, QPoly>& memo) {
  auto it = memo.find(h.values());
  if (it != memo.end()) return it->second;
  QPoly result;
  if (h.size() == 1 || !is_connected(h)) {
    result = poincare_direct(h);
  } else {
    for (int j = 1; j <= h.size(); ++j) {
      QPoly term = poincare_rec_memo(minor(h, j), memo) * QPoly::monomial(Int(1), h(j) - j);
      result += term;
    }
  }
  memo.emplace(h.values(), result);
  return result;
}

}  // namespace

QPoly poincare_recursive(const HessenbergFunction& h) {
  std::map<std::vector<int>, QPoly> memo;
  return poincare_rec_memo(h, memo);
}

QPoly poincare_h1_closed(int n, int h1) {
  if (n < 2 || h1 < 2 || h1 > n)
    throw Error(ErrorKind::BadParameters, "need 2 <= h1 <= n");
  QPoly first = q_int(h1) * q_fact(n - 1);
  QPoly second = QPoly::monomial(Int(n - 1), h1 - 1) * q_int(n - h1) * q_fact(n - 2);
  return first + second;
}

QPoly lollipop_Fn(int n) { return poincare_h1_closed(n, 2); }

HessenbergFunction lollipop_pn_function(int n) {
  if (n < 4) throw Error(ErrorKind::BadParameters, "defined for n >= 4");
  std::vector<int> v(n, n - 1);
  v[0] = 2;
  v[n - 2] = n;
  v[n - 1] = n;
  return HessenbergFunction::validate(std::move(v));
}

QPoly lollipop_Pn(int n) {
  if (n < 4) throw Error(ErrorKind::BadParameters, "defined for n >= 4");
  if (n == 4) return poincare_direct(lollipop_pn_function(4));
  QPoly pn1 = lollipop_Pn(n - 1);
  QPoly one_plus_q = q_int(2);
  QPoly term1 = one_plus_q * one_plus_q * q_fact(n - 2);
  QPoly term2 = (QPoly::monomial(Int(n - 2), 1) + QPoly::monomial(Int(n - 2), 2)) *
                q_int(n - 3) * q_fact(n - 3);
  QPoly brace = one_plus_q * q_fact(n - 3) +
                QPoly::monomial(Int(n - 3), 1) * q_int(n - 4) * q_fact(n - 4);
  QPoly term3 =
      (QPoly::monomial(Int(n - 1), 1) + QPoly::monomial(Int(n - 1), n - 3)) * brace;
  // q + q^2 + ... + q^{n-4}
  QPoly geom = QPoly::monomial(Int(1), 1) * q_int(n - 4);
  return term1 + term2 + term3 + geom * pn1;
}

QPoly Qn(int n) {
  if (n < 4) throw Error(ErrorKind::BadParameters, "defined for n >= 4");
  QPoly head = QPoly(Int(1)) + QPoly::monomial(Int(2 * n), 1) +
               QPoly::monomial(Int(n) * (n - 1), 2);
  return head * q_fact(n - 2) + QPoly::monomial(Int(n) * (n - 3) / 2, n - 3);
}

QPoly hilb_invariants(const HessenbergFunction& h) {
  QPoly r(Int(1));
  for (int j = 1; j <= h.size() - 1; ++j) r = r * q_int(h(j) - j + 1);
  return r;
}

SubringBounds subring_upper_bound(int n) {
  if (n < 4) throw Error(ErrorKind::BadParameters, "defined for n >= 4");
  const QPoly fact = q_fact(n - 2);
  const QPoly q1 = QPoly::monomial(Int(1), 1), q2 = QPoly::monomial(Int(1), 2);
  SubringBounds s;
  s.a = q_int(2) * q_int(2) * fact;
  s.b = (q1 + q2) * Int(n - 1) * fact;
  s.c = s.b;
  s.d = q2 * Int(n * n - 3 * n + 1) * fact;
  s.combined = (QPoly(Int(1)) + QPoly::monomial(Int(2 * n), 1) +
                QPoly::monomial(Int(n) * (n - 1), 2)) *
               fact;
  return s;
}

}  // namespace hesscoh
