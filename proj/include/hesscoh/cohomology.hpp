#ifndef HESSCOH_COHOMOLOGY_HPP
#define HESSCOH_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "hesscoh/classes.hpp"
#include "hesscoh/echelon.hpp"
#include "hesscoh/series.hpp"

namespace hesscoh {

// ---------------------------------------------------------------------------
// Coordinates: a degree-d cochain is a vector over columns
//   (lex rank of w) * C(d+n-1, n-1) + colex rank of the monomial.
// ---------------------------------------------------------------------------
SparseVec cochain_to_vec(const Cochain& f, int d);
Cochain vec_to_cochain(const SparseVec& v, int n, int d);

// Rank of the degree-2d graded piece of graph cohomology, from the Betti
// numbers and the free-module structure:
//   sum_e b_{2e} C(d-e+n-1, n-1).
long long equivariant_rank_oracle(const HessenbergFunction& h, int d);

// Spec of the degree-two spanning set: x_k, then y_{j,k} for j in
// bottom(h)\{n-1}, then tau_A for |A| in L(h)\{n-1}. Constants t_i are
// handled separately by the engines.
std::vector<ClassSpec> degree2_generator_specs(const HessenbergFunction& h);

// The full spanning set as cochains: the generator classes plus the constant
// functions t_1..t_n. Every member is checked to satisfy the edge condition.
std::vector<Cochain> degree2_spanning_set(const HessenbergFunction& h);

struct ResourceLimits {
  // Kernel computations refuse when n! * C(d+n-1,n-1) exceeds this.
  std::uint64_t kernel_columns = 30000;
  // Span eliminations refuse when ambient * oracle exceeds this.
  std::uint64_t span_cells = 600u * 1000 * 1000;
  // Evaluated product pools refuse beyond this many vectors per degree.
  std::uint64_t pool_size = 2u * 1000 * 1000;
  bool force = false;  // ignore all three gates
  unsigned threads = 0;
};

// Solves the edge-divisibility constraints in degree 2d and returns an
// echelon basis of the solution space. Gated by kernel_columns.
EchelonBasis equivariant_kernel_basis(const HessenbergFunction& h, int d,
                                      const ResourceLimits& lim = {});

struct SpanLevels {
  std::vector<long long> ranks;  // ranks[d] for d = 0..d_max
  // Products that were new modulo lower levels, per degree; together with
  // their monomial shifts these span every computed graded piece.
  std::vector<std::vector<Cochain>> fresh;
};

// Iterated span of products of the degree-two set, by exact elimination.
// ranks[d] is the dimension of the degree-2d piece of the subalgebra inside
// equivariant cohomology.
SpanLevels product_span_levels(const HessenbergFunction& h, int d_max,
                               const ResourceLimits& lim = {});
std::vector<long long> product_span_ranks(const HessenbergFunction& h, int d_max,
                                          const ResourceLimits& lim = {});

struct GradedRow {
  int d = 0;  // cohomological degree 2d
  long long span = 0;
  long long oracle = 0;
  bool ok = false;
};

struct GradedReport {
  std::string h;
  int dim = 0;
  std::vector<GradedRow> degrees;  // d = 1.. first failure (or dim when all pass)
  bool generated = false;
  std::string to_json() const;
};

enum class GenMethod { Auto, Elimination, Pairing };

// Decides degree-two generation: the verdict is true exactly when the span
// rank meets the oracle in every degree up to dim. Small instances run the
// elimination engine degree by degree; large ones are certified through the
// Poincare pairing computed by localization, with exact elimination used to
// attribute any deficit to its first failing degree.
GradedReport is_degree2_generated(const HessenbergFunction& h,
                                  GenMethod method = GenMethod::Auto,
                                  const ResourceLimits& lim = {});

// Hilbert series of the subring generated in degree two inside ordinary
// cohomology: coefficient of q^d is rank(P_d + I_d) - rank(I_d) where I_d
// collects t_i multiples of the degree-2(d-1) kernel basis.
QPoly subring_hilbert(const HessenbergFunction& h, int d_max,
                      const ResourceLimits& lim = {});

// Graded dimensions of Q[x_1..x_n]/(f_{h(1),1},...,f_{h(n),n}) with
//   f_{h(j),j} = sum_{k<=j} x_k prod_{l=j+1}^{h(j)} (x_k - x_l).
QPoly invariant_quotient_hilbert(const HessenbergFunction& h, int d_max);

// The ideal generators themselves; deg f_{h(j),j} = h(j) - j + 1.
std::vector<MultiPoly> presentation_ideal(const HessenbergFunction& h);

}  // namespace hesscoh

#endif
