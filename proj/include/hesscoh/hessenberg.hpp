#ifndef HESSCOH_HESSENBERG_HPP
#define HESSCOH_HESSENBERG_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hesscoh/rational.hpp"

namespace hesscoh {

// Non-decreasing h : [n] -> [n] with j <= h(j). Immutable once validated.
class HessenbergFunction {
 public:
  // Checks monotonicity and j <= h(j) <= n. Throws NotMonotone,
  // BelowDiagonal or OutOfRange.
  static HessenbergFunction validate(std::vector<int> values);

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int j) const { return v_[j - 1]; }  // j in [n]
  const std::vector<int>& values() const { return v_; }

  std::string to_string() const;  // "2,3,4,4" (also the CLI cache key)
  static HessenbergFunction parse(const std::string& s);

  bool operator==(const HessenbergFunction& o) const { return v_ == o.v_; }
  bool operator<(const HessenbergFunction& o) const { return v_ < o.v_; }

 private:
  explicit HessenbergFunction(std::vector<int> v) : v_(std::move(v)) {}
  std::vector<int> v_;
};

// Staircase parameters of the two-parameter family
//   h(j) = a+1 (j <= a),  j+1 (a < j < b),  n (j >= b),  1 <= a < b <= n.
struct LollipopShape {
  int a = 0;
  int b = 0;
};

bool is_connected(const HessenbergFunction& h);
int dimension(const HessenbergFunction& h);

struct BottomEll {
  std::set<int> bottom;  // j in [n-1] with h(j-1) = h(j) = j+1, h(0) = 1
  std::set<int> ell;     // j in [n-1] with h(j-1) = j and h(j) = j+1
};
BottomEll bottom_and_ell_sets(const HessenbergFunction& h);

// Smallest column whose shading reaches row i: min{ j : h(j) >= i }.
int h_star(const HessenbergFunction& h, int i);

// Deletes row j and column j from the staircase diagram.
HessenbergFunction minor(const HessenbergFunction& h, int j);

// Reflects the diagram across the anti-diagonal; an involution.
HessenbergFunction flip(const HessenbergFunction& h);

// Canonical (a, b) when h belongs to the family above, otherwise nullopt.
// a = h(1)-1; b = min{ j : h(j) = n } bumped to a+1 when that is <= a.
std::optional<LollipopShape> lollipop_form(const HessenbergFunction& h);

// Builds h back from (a, b) at size n.
HessenbergFunction lollipop_function(int a, int b, int n);

// True when the closure of h under taking the first or last minor contains
// a member of one of the three obstruction families:
//   (alpha, beta, ..., beta)                      3 <= alpha < beta
//   (beta-1, ..., beta-1, beta, ..., beta)        alpha >= 3 trailing betas
//   (2, gamma-1, ..., gamma-1, gamma, gamma)      gamma >= 5
bool has_forbidden_minor(const HessenbergFunction& h);

std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool connected_only);

struct Decomposition {
  HessenbergFunction left;
  HessenbergFunction right;
  Int multiplicity;  // C(n, k) at the smallest split point k
};
// Splits at the smallest k < n with h(k) = k. Throws AlreadyConnected.
Decomposition decompose_disconnected(const HessenbergFunction& h);

// Boxes strictly below the diagonal, #{(i,j) : j < i <= h(j)}.
int box_count_below_diagonal(const HessenbergFunction& h);

Int binomial(int n, int k);

}  // namespace hesscoh

#endif
