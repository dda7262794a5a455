#include "hesscoh/cochain.hpp"

namespace hesscoh {

Cochain Cochain::constant(int n, const MultiPoly& value) {
  Cochain f(n, std::max(value.max_degree(), 0));
  const auto N = static_cast<std::uint32_t>(factorial(n));
  for (std::uint32_t r = 0; r < N; ++r)
    if (!value.is_zero()) f.vals_.emplace(r, value);
  return f;
}

const MultiPoly& Cochain::at(const Perm& w) const { return at_rank(w.lex_rank()); }

const MultiPoly& Cochain::at_rank(std::uint32_t r) const {
  static const MultiPoly zero;
  auto it = vals_.find(r);
  return it == vals_.end() ? zero : it->second;
}

void Cochain::set(const Perm& w, MultiPoly value) { set_rank(w.lex_rank(), std::move(value)); }

void Cochain::set_rank(std::uint32_t r, MultiPoly value) {
  if (value.is_zero())
    vals_.erase(r);
  else
    vals_[r] = std::move(value);
}

bool Cochain::values_homogeneous() const {
  for (const auto& [r, p] : vals_)
    if (!p.is_homogeneous(d_)) return false;
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain r = *this;
  for (const auto& [k, p] : o.vals_) {
    auto it = r.vals_.find(k);
    if (it == r.vals_.end()) {
      r.vals_.emplace(k, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) r.vals_.erase(it);
    }
  }
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain r = *this;
  for (const auto& [k, p] : o.vals_) {
    auto it = r.vals_.find(k);
    if (it == r.vals_.end()) {
      r.vals_.emplace(k, -p);
    } else {
      it->second -= p;
      if (it->second.is_zero()) r.vals_.erase(it);
    }
  }
  return r;
}

Cochain Cochain::operator*(const Cochain& o) const {
  Cochain r(n_, d_ + o.d_);
  for (const auto& [k, p] : vals_) {
    auto it = o.vals_.find(k);
    if (it == o.vals_.end()) continue;
    MultiPoly prod = p * it->second;
    if (!prod.is_zero()) r.vals_.emplace(k, std::move(prod));
  }
  return r;
}

Cochain Cochain::operator*(const Rat& s) const {
  Cochain r(n_, d_);
  if (s == 0) return r;
  for (const auto& [k, p] : vals_) r.vals_.emplace(k, p * s);
  return r;
}

bool Cochain::operator==(const Cochain& o) const {
  return n_ == o.n_ && vals_ == o.vals_;
}

bool is_gkm_class(const LabeledGraph& g, const Cochain& f) {
  for (const auto& e : g.edges) {
    const MultiPoly diff = f.at_rank(e.u) - f.at_rank(e.v);
    if (diff.is_zero()) continue;
    if (!divisible_by_difference(diff, e.label_a, e.label_b)) return false;
  }
  return true;
}

bool is_gkm_class(const HessenbergFunction& h, const Cochain& f) {
  return is_gkm_class(build_graph(h), f);
}

Cochain dot_action(const Perm& sigma, const Cochain& f) {
  if (sigma.size() != f.n()) throw Error(ErrorKind::BadParameters, "size mismatch");
  Cochain r(f.n(), f.poly_degree());
  for (const auto& [k, p] : f.support()) {
    // value sits at w = sigma * (original key)
    const Perm w = sigma.compose(Perm::from_lex_rank(k, f.n()));
    r.set(w, permute_vars(p, sigma));
  }
  return r;
}

Cochain involution_vee(const Cochain& f) {
  Cochain r(f.n(), f.poly_degree());
  const Perm w0 = Perm::longest(f.n());
  for (const auto& [k, p] : f.support()) {
    // f_vee(w) = f(w w0); the value keyed by k lands at k * w0^{-1} = k * w0.
    const Perm w = Perm::from_lex_rank(k, f.n()).compose(w0);
    r.set(w, p);
  }
  return r;
}

}  // namespace hesscoh
