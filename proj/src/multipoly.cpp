#include "hesscoh/multipoly.hpp"

#include <sstream>

namespace hesscoh {

Mono mono_mul(Mono a, Mono b, int n) {
  Mono r = 0;
  for (int i = 1; i <= n; ++i) {
    int e = mono_exp(a, i) + mono_exp(b, i);
    if (e > kMaxExp) throw Error(ErrorKind::TooLarge, "monomial exponent overflow");
    r = mono_set_exp(r, i, e);
  }
  return r;
}

std::vector<int> mono_unpack(Mono m, int n) {
  std::vector<int> e(n);
  for (int i = 1; i <= n; ++i) e[i - 1] = mono_exp(m, i);
  return e;
}

Mono mono_pack(const std::vector<int>& e) {
  Mono m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) m = mono_set_exp(m, static_cast<int>(i + 1), e[i]);
  return m;
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t mono_count(int n, int d) { return binomial_u64(d + n - 1, n - 1); }

std::uint32_t mono_rank_colex(Mono m, int n, int d) {
  // Peel variables from the top; all monomials with a smaller top exponent
  // come first.
  std::uint64_t rank = 0;
  int rem = d;
  for (int k = n; k >= 2; --k) {
    const int e = mono_exp(m, k);
    for (int v = 0; v < e; ++v) rank += mono_count(k - 1, rem - v);
    rem -= e;
  }
  return static_cast<std::uint32_t>(rank);
}

Mono mono_unrank_colex(std::uint32_t rank, int n, int d) {
  Mono m = 0;
  std::uint64_t r = rank;
  int rem = d;
  for (int k = n; k >= 2; --k) {
    int e = 0;
    for (;;) {
      std::uint64_t block = mono_count(k - 1, rem - e);
      if (r < block) break;
      r -= block;
      ++e;
    }
    m = mono_set_exp(m, k, e);
    rem -= e;
  }
  return mono_set_exp(m, 1, rem);
}

std::vector<Mono> monomials_of_degree(int n, int d) {
  std::vector<Mono> out;
  out.reserve(mono_count(n, d));
  for (std::uint32_t r = 0; r < mono_count(n, d); ++r)
    out.push_back(mono_unrank_colex(r, n, d));
  return out;
}

MultiPoly MultiPoly::constant(int n, Rat c) {
  MultiPoly p(n);
  if (c != 0) p.terms_.emplace(Mono(0), std::move(c));
  return p;
}

MultiPoly MultiPoly::var(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorKind::BadParameters, "variable index out of range");
  MultiPoly p(n);
  p.terms_.emplace(mono_var(i), Rat(1));
  return p;
}

Rat MultiPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::set_coeff(Mono m, Rat c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = std::move(c);
}

void MultiPoly::add_term(Mono m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m, n_));
  return d;
}

int MultiPoly::min_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = mono_total_degree(m, n_);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (mono_total_degree(m, n_) != d) return false;
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(std::max(n_, o.n_));
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2, r.n_), c1 * c2);
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
  MultiPoly r(n_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& theta) const {
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 1; i <= n_; ++i)
      for (int e = 0; e < mono_exp(m, i); ++e) t *= theta[i - 1];
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) os << '-', a = -a;
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool wrote = false;
    if (a != 1 || m == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 1; i <= n_; ++i) {
      int e = mono_exp(m, i);
      if (!e) continue;
      if (wrote) os << '*';
      os << 't' << i;
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly permute_vars(const MultiPoly& p, const Perm& sigma) {
  if (sigma.size() != p.vars())
    throw Error(ErrorKind::BadParameters, "permutation size mismatch");
  MultiPoly r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Mono m2 = 0;
    for (int i = 1; i <= p.vars(); ++i) m2 = mono_set_exp(m2, sigma(i), mono_exp(m, i));
    r.add_term(m2, c);
  }
  return r;
}

MultiPoly substitute_equal(const MultiPoly& p, int a, int b) {
  MultiPoly r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Mono m2 = mono_set_exp(m, a, 0);
    int eb = mono_exp(m2, b) + mono_exp(m, a);
    if (eb > kMaxExp) throw Error(ErrorKind::TooLarge, "monomial exponent overflow");
    m2 = mono_set_exp(m2, b, eb);
    r.add_term(m2, c);
  }
  return r;
}

bool divisible_by_difference(const MultiPoly& p, int a, int b) {
  if (a == b) throw Error(ErrorKind::BadParameters, "need a != b");
  return substitute_equal(p, a, b).is_zero();
}

}  // namespace hesscoh
