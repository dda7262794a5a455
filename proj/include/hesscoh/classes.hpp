#ifndef HESSCOH_CLASSES_HPP
#define HESSCOH_CLASSES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hesscoh/cochain.hpp"

namespace hesscoh {

// The explicit degree-two cochains:
//   X     x_k(w)      = t_{w(k)}
//   Y     y_{j,k}(w)  = t_k - t_{w(j+1)}        if k in {w(1)..w(j)}, else 0
//   YSTAR y*_{i,k}(w) = t_k - t_{w(i-1)}        if k in {w(i)..w(n)}, else 0
//   TAU   tau_A(w)    = t_{w(|A|)} - t_{w(|A|+1)} if {w(1)..w(|A|)} = A, else 0
//   RHO   rho_k(w)    = t_{w(n-1)} - t_{w(n)}   if k = w(n), else 0
struct ClassSpec {
  enum class Kind { X, Y, YSTAR, TAU, RHO };
  Kind kind = Kind::X;
  int k = 0;           // X, RHO, and the second parameter of Y / YSTAR
  int j = 0;           // Y column
  int i = 0;           // YSTAR row
  std::vector<int> A;  // TAU subset, strictly increasing

  std::string to_string() const;  // "x:2", "y:3,5", "ystar:8,11", "tau:{1,4,5}", "rho:3"
  static ClassSpec parse(const std::string& s);

  static ClassSpec x(int k) { return {Kind::X, k, 0, 0, {}}; }
  static ClassSpec y(int j, int k) { return {Kind::Y, k, j, 0, {}}; }
  static ClassSpec ystar(int i, int k) { return {Kind::YSTAR, k, 0, i, {}}; }
  static ClassSpec tau(std::vector<int> A) { return {Kind::TAU, 0, 0, 0, std::move(A)}; }
  static ClassSpec rho(int k) { return {Kind::RHO, k, 0, 0, {}}; }
};

// The formulas do not involve h; membership in a given H_T^2 is a separate
// question. Throws BadParameters when indices are out of range.
Cochain build_class(int n, const ClassSpec& spec);

// Side condition for the class to restrict to H_T^2 of the given h:
//   X: always; Y: j in bottom(h); YSTAR: h*(i) = i-1; TAU: |A| in L(h);
//   RHO: h = (2, n-1, ..., n-1, n, n).
bool membership_conditions(const HessenbergFunction& h, const ClassSpec& spec);

struct RelationReport {
  bool ok = true;
  std::string failed_identity;         // empty when ok
  std::optional<std::string> witness;  // one-line form of the failing w
  int identities_checked = 0;
};

// Pointwise identities over all of S_n, streamed without materializing
// cochains:
//   sum_k x_k = sum_i t_i (constant)
//   sum_k y_{j,k} = x_1 + ... + x_j - j x_{j+1}       for j in bottom(h)
//   sum_{|A|=j} tau_A = x_j - x_{j+1}                  for j in L(h)
// and, when h = (2, n-1, ..., n-1, n, n):
//   sum_k rho_k = x_{n-1} - x_n
//   (y_k - y_l) - (rho_k - rho_l) = t_k - t_l (constant), all k < l
RelationReport verify_linear_relations(const HessenbergFunction& h, unsigned threads = 0);

// Product identities for h = (2, n-1, ..., n-1, n, n):
//   tau_k tau_l = (x_1 - x_2) tau_k when k = l, 0 otherwise
//   rho_k rho_l = (x_{n-1} - x_n) rho_k when k = l, 0 otherwise
//   tau_k rho_k = 0
//   (x_1 - t_k) tau_k = 0,  (x_n - t_k) rho_k = 0   (at every point)
RelationReport verify_product_relations(int n);

}  // namespace hesscoh

#endif
