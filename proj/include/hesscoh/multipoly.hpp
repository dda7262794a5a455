#ifndef HESSCOH_MULTIPOLY_HPP
#define HESSCOH_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "hesscoh/monomial.hpp"
#include "hesscoh/permutation.hpp"
#include "hesscoh/rational.hpp"

namespace hesscoh {

// Polynomial in t_1..t_n over Q. Terms are kept in colex order with no zero
// coefficients stored.
class MultiPoly {
 public:
  MultiPoly() : n_(0) {}
  explicit MultiPoly(int n) : n_(n) {}

  static MultiPoly constant(int n, Rat c);
  static MultiPoly var(int n, int i);  // t_i

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Rat coeff(Mono m) const;
  void set_coeff(Mono m, Rat c);
  void add_term(Mono m, const Rat& c);

  int max_degree() const;  // -1 when zero
  int min_degree() const;
  bool is_homogeneous(int d) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& s) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& theta) const;

  std::string to_string() const;  // "3*t1^2*t3 - 1/2*t2"

 private:
  int n_;
  std::map<Mono, Rat> terms_;
};

// Ring automorphism t_i -> t_{sigma(i)}.
MultiPoly permute_vars(const MultiPoly& p, const Perm& sigma);

// Substitutes t_a := t_b.
MultiPoly substitute_equal(const MultiPoly& p, int a, int b);

// Membership in the principal ideal (t_a - t_b): the substitution t_a := t_b
// must annihilate p.
bool divisible_by_difference(const MultiPoly& p, int a, int b);

}  // namespace hesscoh

#endif
