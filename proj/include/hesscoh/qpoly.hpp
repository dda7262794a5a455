#ifndef HESSCOH_QPOLY_HPP
#define HESSCOH_QPOLY_HPP

#include <string>
#include <vector>

#include "hesscoh/rational.hpp"

namespace hesscoh {

// Univariate polynomial in q with exact integer coefficients, stored densely
// with no trailing zeros. Used for Poincare polynomials and Hilbert series.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Int constant);
  explicit QPoly(std::vector<Int> coeffs);  // coeffs[i] is the q^i coefficient

  static QPoly monomial(Int coeff, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval_at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Int& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  // Truncation to powers < q^k, for congruences mod q^k.
  QPoly truncated(int k) const;
  bool congruent_mod_qk(const QPoly& o, int k) const;

  bool is_palindromic() const;

  // "c0,c1,c2,..." and the human form "1+4q+q^2".
  std::string serialize() const;
  std::string pretty() const;
  static QPoly parse(const std::string& s);

 private:
  void trim();
  std::vector<Int> c_;
};

QPoly q_int(int m);   // [m]_q = 1 + q + ... + q^{m-1}
QPoly q_fact(int m);  // [m]_q! = [1]_q [2]_q ... [m]_q

}  // namespace hesscoh

#endif
