#ifndef HESSCOH_ECHELON_HPP
#define HESSCOH_ECHELON_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hesscoh/rational.hpp"

namespace hesscoh {

// Sparse exact-rational row vector: strictly increasing column indices, no
// zero entries.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Rat>> e;

  bool empty() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }
  std::uint32_t lead_col() const { return e.front().first; }
  const Rat& lead_val() const { return e.front().second; }

  void push(std::uint32_t col, Rat val);  // columns must arrive in order
  Rat at(std::uint32_t col) const;
  SparseVec scaled(const Rat& s) const;
  // this -= s * o
  void axpy_sub(const Rat& s, const SparseVec& o);
  bool operator==(const SparseVec& o) const { return e == o.e; }

  static SparseVec unit(std::uint32_t col);
  static SparseVec dense(const std::vector<Rat>& row);
};

// Incremental row-reduction basis. Rows are keyed by pivot column with the
// pivot entry normalized to 1. In Reduced mode every stored row is reduced
// against all other pivots; Triangular mode skips back-substitution and
// leaves rows as inserted (configuration option for fill-sensitive runs).
class EchelonBasis {
 public:
  enum class Mode { Reduced, Triangular };

  explicit EchelonBasis(Mode mode = Mode::Reduced) : mode_(mode) {}

  // Reduces v against the basis. If a nonzero remainder survives it is
  // normalized, stored, and (in Reduced mode) eliminated from the other
  // rows; returns whether the rank grew.
  bool insert(SparseVec v);

  // Reduction without insertion; the fully reduced remainder.
  SparseVec reduce(SparseVec v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, SparseVec>& rows() const { return rows_; }
  Mode mode() const { return mode_; }

 private:
  Mode mode_;
  std::map<std::uint32_t, SparseVec> rows_;
};

std::size_t rank_of(const std::vector<SparseVec>& vectors,
                    EchelonBasis::Mode mode = EchelonBasis::Mode::Reduced);

// Basis of the nullspace {x : Rx = 0} of the system whose rows are given,
// over columns 0..ncols-1. Kernel vectors come out one per free column, in
// ascending column order.
std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows,
                                      std::uint32_t ncols);

}  // namespace hesscoh

#endif
