#ifndef HESSCOH_COCHAIN_HPP
#define HESSCOH_COCHAIN_HPP

#include <map>

#include "hesscoh/graph.hpp"
#include "hesscoh/multipoly.hpp"

namespace hesscoh {

// A map S_n -> Q[t_1..t_n] with homogeneous values of a fixed degree, stored
// sparsely on its support. Keys are lexicographic ranks.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int n, int poly_degree) : n_(n), d_(poly_degree) {}

  static Cochain constant(int n, const MultiPoly& value);

  int n() const { return n_; }
  int poly_degree() const { return d_; }  // cohomological degree is twice this

  const MultiPoly& at(const Perm& w) const;
  const MultiPoly& at_rank(std::uint32_t r) const;
  void set(const Perm& w, MultiPoly value);
  void set_rank(std::uint32_t r, MultiPoly value);

  const std::map<std::uint32_t, MultiPoly>& support() const { return vals_; }
  bool is_zero() const { return vals_.empty(); }

  // Every stored value must be homogeneous of the declared degree.
  bool values_homogeneous() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator*(const Cochain& o) const;  // pointwise product
  Cochain operator*(const Rat& s) const;
  bool operator==(const Cochain& o) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::map<std::uint32_t, MultiPoly> vals_;
};

// Divisibility of f(w) - f(v) by the edge label across every edge.
bool is_gkm_class(const LabeledGraph& g, const Cochain& f);
bool is_gkm_class(const HessenbergFunction& h, const Cochain& f);

// (sigma . f)(w) = sigma(f(sigma^{-1} w)), with sigma acting on polynomials
// by t_i -> t_{sigma(i)}.
Cochain dot_action(const Perm& sigma, const Cochain& f);

// f_vee(w) = f(w w_0).
Cochain involution_vee(const Cochain& f);

}  // namespace hesscoh

#endif
