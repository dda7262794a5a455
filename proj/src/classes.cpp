#include "hesscoh/classes.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "hesscoh/parallel.hpp"
#include "hesscoh/series.hpp"

namespace hesscoh {

std::string ClassSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::X: os << "x:" << k; break;
    case Kind::Y: os << "y:" << j << ',' << k; break;
    case Kind::YSTAR: os << "ystar:" << i << ',' << k; break;
    case Kind::RHO: os << "rho:" << k; break;
    case Kind::TAU: {
      os << "tau:{";
      for (std::size_t t = 0; t < A.size(); ++t) {
        if (t) os << ',';
        os << A[t];
      }
      os << '}';
      break;
    }
  }
  return os.str();
}

ClassSpec ClassSpec::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "missing ':' in " + s);
  const std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  auto parse_ints = [&](const std::string& t) {
    std::vector<int> out;
    std::string cur;
    for (char ch : t) {
      if (ch == ',') {
        out.push_back(std::stoi(cur));
        cur.clear();
      } else if (ch >= '0' && ch <= '9') {
        cur.push_back(ch);
      } else if (ch != ' ') {
        throw Error(ErrorKind::ParseError, "bad class spec " + s);
      }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
  };
  if (head == "x" || head == "rho") {
    auto v = parse_ints(rest);
    if (v.size() != 1) throw Error(ErrorKind::ParseError, "bad class spec " + s);
    return head == "x" ? x(v[0]) : rho(v[0]);
  }
  if (head == "y" || head == "ystar") {
    auto v = parse_ints(rest);
    if (v.size() != 2) throw Error(ErrorKind::ParseError, "bad class spec " + s);
    return head == "y" ? y(v[0], v[1]) : ystar(v[0], v[1]);
  }
  if (head == "tau") {
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw Error(ErrorKind::ParseError, "bad tau spec " + s);
    auto v = parse_ints(rest.substr(1, rest.size() - 2));
    return tau(std::move(v));
  }
  throw Error(ErrorKind::ParseError, "unknown class kind " + head);
}

namespace {

void check_range(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameters, what);
}

}  // namespace

Cochain build_class(int n, const ClassSpec& spec) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind) {
    case Kind::X: check_range(1 <= spec.k && spec.k <= n, "x wants k in [n]"); break;
    case Kind::Y:
      check_range(1 <= spec.j && spec.j <= n - 1 && 1 <= spec.k && spec.k <= n,
                  "y wants j in [n-1], k in [n]");
      break;
    case Kind::YSTAR:
      check_range(2 <= spec.i && spec.i <= n && 1 <= spec.k && spec.k <= n,
                  "ystar wants i in [2,n], k in [n]");
      break;
    case Kind::TAU: {
      check_range(!spec.A.empty() && static_cast<int>(spec.A.size()) <= n - 1,
                  "tau wants nonempty A with |A| < n");
      int prev = 0;
      for (int a : spec.A) {
        check_range(prev < a && 1 <= a && a <= n, "tau wants a strictly increasing subset of [n]");
        prev = a;
      }
      break;
    }
    case Kind::RHO: check_range(n >= 2 && 1 <= spec.k && spec.k <= n, "rho wants k in [n], n >= 2"); break;
  }

  Cochain f(n, 1);
  for_each_permutation(n, [&](const Perm& w) {
    MultiPoly val(n);
    switch (spec.kind) {
      case Kind::X:
        val = MultiPoly::var(n, w(spec.k));
        break;
      case Kind::Y: {
        bool in = false;
        for (int p = 1; p <= spec.j; ++p) in = in || w(p) == spec.k;
        if (in) val = MultiPoly::var(n, spec.k) - MultiPoly::var(n, w(spec.j + 1));
        break;
      }
      case Kind::YSTAR: {
        bool in = false;
        for (int p = spec.i; p <= n; ++p) in = in || w(p) == spec.k;
        if (in) val = MultiPoly::var(n, spec.k) - MultiPoly::var(n, w(spec.i - 1));
        break;
      }
      case Kind::TAU: {
        const int j = static_cast<int>(spec.A.size());
        std::vector<int> prefix;
        for (int p = 1; p <= j; ++p) prefix.push_back(w(p));
        std::sort(prefix.begin(), prefix.end());
        if (prefix == spec.A)
          val = MultiPoly::var(n, w(j)) - MultiPoly::var(n, w(j + 1));
        break;
      }
      case Kind::RHO:
        if (w(n) == spec.k)
          val = MultiPoly::var(n, w(n - 1)) - MultiPoly::var(n, w(n));
        break;
    }
    if (!val.is_zero()) f.set(w, std::move(val));
  });
  return f;
}

bool membership_conditions(const HessenbergFunction& h, const ClassSpec& spec) {
  using Kind = ClassSpec::Kind;
  const int n = h.size();
  const auto be = bottom_and_ell_sets(h);
  switch (spec.kind) {
    case Kind::X: return true;
    case Kind::Y: return be.bottom.count(spec.j) > 0;
    case Kind::YSTAR: return h_star(h, spec.i) == spec.i - 1;
    case Kind::TAU: return be.ell.count(static_cast<int>(spec.A.size())) > 0;
    case Kind::RHO: {
      if (n < 4) return false;
      return h == lollipop_pn_function(n);
    }
  }
  return false;
}

namespace {

// Degree-one values as dense integer coefficient vectors over t_1..t_n.
struct LinForm {
  std::vector<long long> c;
  explicit LinForm(int n) : c(n, 0) {}
  void clear() { std::fill(c.begin(), c.end(), 0); }
  bool operator==(const LinForm& o) const { return c == o.c; }
};

struct SweepFailure {
  std::uint32_t rank = UINT32_MAX;
  std::string identity;
};

// Checks all linear identities at one permutation. Returns the violated
// identity name or empty.
std::string check_linear_at(const HessenbergFunction& h, const Perm& w,
                            const BottomEll& be, bool pn_shape,
                            const std::vector<std::vector<int>>* tau_subsets) {
  const int n = h.size();
  LinForm lhs(n), rhs(n);

  // sum_k x_k = sum_i t_i
  for (int k = 1; k <= n; ++k) lhs.c[w(k) - 1] += 1;
  for (int i = 0; i < n; ++i) rhs.c[i] += 1;
  if (!(lhs == rhs)) return "sum x_k = sum t_i";

  for (int j : be.bottom) {
    lhs.clear();
    rhs.clear();
    for (int k = 1; k <= n; ++k) {
      bool in = false;
      for (int p = 1; p <= j; ++p) in = in || w(p) == k;
      if (in) {
        lhs.c[k - 1] += 1;
        lhs.c[w(j + 1) - 1] -= 1;
      }
    }
    for (int p = 1; p <= j; ++p) rhs.c[w(p) - 1] += 1;
    rhs.c[w(j + 1) - 1] -= j;
    if (!(lhs == rhs)) return "sum_k y_{" + std::to_string(j) + ",k}";
  }

  for (std::size_t t = 0; t < be.ell.size(); ++t) {
    const int j = *std::next(be.ell.begin(), t);
    lhs.clear();
    rhs.clear();
    if (tau_subsets && !tau_subsets[t].empty()) {
      // literal sum over all A of size j
      std::vector<int> prefix;
      for (int p = 1; p <= j; ++p) prefix.push_back(w(p));
      std::sort(prefix.begin(), prefix.end());
      for (const auto& A : tau_subsets[t]) {
        if (A == prefix) {
          lhs.c[w(j) - 1] += 1;
          lhs.c[w(j + 1) - 1] -= 1;
        }
      }
    } else {
      lhs.c[w(j) - 1] += 1;
      lhs.c[w(j + 1) - 1] -= 1;
    }
    rhs.c[w(j) - 1] += 1;
    rhs.c[w(j + 1) - 1] -= 1;
    if (!(lhs == rhs)) return "sum_{|A|=" + std::to_string(j) + "} tau_A";
  }

  if (pn_shape) {
    lhs.clear();
    rhs.clear();
    for (int k = 1; k <= n; ++k)
      if (w(n) == k) {
        lhs.c[w(n - 1) - 1] += 1;
        lhs.c[w(n) - 1] -= 1;
      }
    rhs.c[w(n - 1) - 1] += 1;
    rhs.c[w(n) - 1] -= 1;
    if (!(lhs == rhs)) return "sum rho_k";

    // (y_k - y_l) - (rho_k - rho_l) = t_k - t_l, y with column n-2
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        lhs.clear();
        auto add_y = [&](int kk, int sign) {
          bool in = false;
          for (int p = 1; p <= n - 2; ++p) in = in || w(p) == kk;
          if (in) {
            lhs.c[kk - 1] += sign;
            lhs.c[w(n - 1) - 1] -= sign;
          }
        };
        auto add_rho = [&](int kk, int sign) {
          if (w(n) == kk) {
            lhs.c[w(n - 1) - 1] += sign;
            lhs.c[w(n) - 1] -= sign;
          }
        };
        add_y(k, 1);
        add_y(l, -1);
        add_rho(k, -1);
        add_rho(l, 1);
        rhs.clear();
        rhs.c[k - 1] += 1;
        rhs.c[l - 1] -= 1;
        if (!(lhs == rhs))
          return "(y_" + std::to_string(k) + "-y_" + std::to_string(l) + ")-(rho_" +
                 std::to_string(k) + "-rho_" + std::to_string(l) + ")";
      }
  }
  return {};
}

}  // namespace

RelationReport verify_linear_relations(const HessenbergFunction& h, unsigned threads) {
  const int n = h.size();
  if (!is_connected(h)) throw Error(ErrorKind::Disconnected, h.to_string());
  const auto be = bottom_and_ell_sets(h);
  const bool pn_shape = n >= 4 && h == lollipop_pn_function(n);

  // Literal subset sums only while the subset counts stay reasonable.
  std::vector<std::vector<std::vector<int>>> subsets_store(be.ell.size());
  bool literal = true;
  {
    std::size_t t = 0;
    for (int j : be.ell) {
      if (binomial(n, j) > 512) {
        literal = false;
        break;
      }
      std::vector<int> idx(j);
      std::vector<std::vector<int>>& subs = subsets_store[t++];
      // enumerate j-subsets of [n]
      for (int i = 0; i < j; ++i) idx[i] = i + 1;
      for (;;) {
        subs.push_back(idx);
        int p = j - 1;
        while (p >= 0 && idx[p] == n - (j - 1 - p)) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
  }
  const std::vector<std::vector<int>>* tau_subsets =
      literal && !subsets_store.empty() ? subsets_store.data() : nullptr;

  RelationReport rep;
  rep.identities_checked = 1 + static_cast<int>(be.bottom.size()) +
                           static_cast<int>(be.ell.size()) +
                           (pn_shape ? 1 + n * (n - 1) / 2 : 0);

  if (n <= 8 || threads == 1) {
    std::string fail;
    Perm w = Perm::identity(n);
    do {
      fail = check_linear_at(h, w, be, pn_shape, tau_subsets);
      if (!fail.empty()) {
        rep.ok = false;
        rep.failed_identity = fail;
        rep.witness = w.one_line();
        return rep;
      }
    } while (w.next_lex());
    return rep;
  }

  // Large n: partition by the first entry, keep the lexicographically first
  // failure so the outcome is thread-count independent.
  std::vector<SweepFailure> fails(n);
  parallel_for(0, static_cast<std::size_t>(n), [&](std::size_t blk) {
    std::vector<int> line(n);
    line[0] = static_cast<int>(blk) + 1;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != line[0]) rest.push_back(v);
    do {
      for (int i = 1; i < n; ++i) line[i] = rest[i - 1];
      const Perm w = Perm::from_one_line(line);
      std::string fail = check_linear_at(h, w, be, pn_shape, tau_subsets);
      if (!fail.empty()) {
        fails[blk] = {w.lex_rank(), fail};
        return;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }, threads);
  for (const auto& f : fails) {
    if (f.rank != UINT32_MAX) {
      rep.ok = false;
      rep.failed_identity = f.identity;
      rep.witness = Perm::from_lex_rank(f.rank, n).one_line();
      return rep;
    }
  }
  return rep;
}

RelationReport verify_product_relations(int n) {
  if (n < 4) throw Error(ErrorKind::BadParameters, "defined for n >= 4");
  if (n > 8) throw Error(ErrorKind::TooLarge, "product sweep gated at n <= 8");
  RelationReport rep;

  std::vector<Cochain> tau(n + 1), rho(n + 1);
  for (int k = 1; k <= n; ++k) {
    tau[k] = build_class(n, ClassSpec::tau({k}));
    rho[k] = build_class(n, ClassSpec::rho(k));
  }
  const Cochain x1 = build_class(n, ClassSpec::x(1));
  const Cochain x2 = build_class(n, ClassSpec::x(2));
  const Cochain xn1 = build_class(n, ClassSpec::x(n - 1));
  const Cochain xn = build_class(n, ClassSpec::x(n));
  const Cochain zero2(n, 2);

  auto fail = [&](const std::string& id, const Cochain& diff) {
    rep.ok = false;
    rep.failed_identity = id;
    if (!diff.support().empty())
      rep.witness = Perm::from_lex_rank(diff.support().begin()->first, n).one_line();
    return rep;
  };

  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      ++rep.identities_checked;
      Cochain lhs = tau[k] * tau[l];
      Cochain rhs = k == l ? (x1 - x2) * tau[k] : zero2;
      if (!(lhs == rhs))
        return fail("tau_" + std::to_string(k) + " tau_" + std::to_string(l), lhs - rhs);
      ++rep.identities_checked;
      lhs = rho[k] * rho[l];
      rhs = k == l ? (xn1 - xn) * rho[k] : zero2;
      if (!(lhs == rhs))
        return fail("rho_" + std::to_string(k) + " rho_" + std::to_string(l), lhs - rhs);
    }
    ++rep.identities_checked;
    Cochain tr = tau[k] * rho[k];
    if (!tr.is_zero()) return fail("tau_k rho_k, k=" + std::to_string(k), tr);

    const Cochain tk = Cochain::constant(n, MultiPoly::var(n, k));
    ++rep.identities_checked;
    Cochain a = (x1 - tk) * tau[k];
    if (!a.is_zero()) return fail("(x_1 - t_k) tau_k, k=" + std::to_string(k), a);
    ++rep.identities_checked;
    Cochain b = (xn - tk) * rho[k];
    if (!b.is_zero()) return fail("(x_n - t_k) rho_k, k=" + std::to_string(k), b);
  }
  return rep;
}

}  // namespace hesscoh
