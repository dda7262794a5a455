#include "hesscoh/echelon.hpp"

#include <algorithm>

namespace hesscoh {

void SparseVec::push(std::uint32_t col, Rat val) {
  if (val == 0) return;
  if (!e.empty() && e.back().first >= col)
    throw Error(ErrorKind::BadParameters, "columns must be strictly increasing");
  e.emplace_back(col, std::move(val));
}

Rat SparseVec::at(std::uint32_t col) const {
  auto it = std::lower_bound(e.begin(), e.end(), col,
                             [](const auto& p, std::uint32_t c) { return p.first < c; });
  return it != e.end() && it->first == col ? it->second : Rat(0);
}

SparseVec SparseVec::scaled(const Rat& s) const {
  SparseVec r;
  if (s == 0) return r;
  r.e.reserve(e.size());
  for (const auto& [c, v] : e) r.e.emplace_back(c, v * s);
  return r;
}

void SparseVec::axpy_sub(const Rat& s, const SparseVec& o) {
  if (s == 0 || o.empty()) return;
  std::vector<std::pair<std::uint32_t, Rat>> out;
  out.reserve(e.size() + o.e.size());
  std::size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
      out.push_back(std::move(e[i++]));
    } else if (i == e.size() || o.e[j].first < e[i].first) {
      out.emplace_back(o.e[j].first, -(s * o.e[j].second));
      ++j;
    } else {
      Rat v = e[i].second - s * o.e[j].second;
      if (v != 0) out.emplace_back(e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  e = std::move(out);
}

SparseVec SparseVec::unit(std::uint32_t col) {
  SparseVec v;
  v.e.emplace_back(col, Rat(1));
  return v;
}

SparseVec SparseVec::dense(const std::vector<Rat>& row) {
  SparseVec v;
  for (std::uint32_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) v.e.emplace_back(c, row[c]);
  return v;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // One ascending sweep. A stored row's entries all sit at columns >= its
  // pivot, so eliminating the entry at index 'at' only changes columns to
  // its right and the scan resumes in place.
  std::size_t at = 0;
  while (at < v.e.size()) {
    auto it = rows_.find(v.e[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    const Rat coef = v.e[at].second;  // pivot entry of the stored row is 1
    v.axpy_sub(coef, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  // Ascending elimination sweep.
  std::size_t at = 0;
  while (at < v.e.size()) {
    auto it = rows_.find(v.e[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    const Rat coef = v.e[at].second;
    v.axpy_sub(coef, it->second);
    // The eliminated column vanished; entries left of it were not touched,
    // so the scan resumes at the same index.
  }
  if (v.empty()) return false;

  const Rat lead = v.lead_val();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    for (auto& [c, val] : v.e) val *= inv;
    v.e.front().second = 1;
  }
  const std::uint32_t pivot = v.lead_col();

  if (mode_ == Mode::Reduced) {
    for (auto& [p, row] : rows_) {
      const Rat c = row.at(pivot);
      if (c != 0) row.axpy_sub(c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors, EchelonBasis::Mode mode) {
  EchelonBasis basis(mode);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows,
                                      std::uint32_t ncols) {
  EchelonBasis basis(EchelonBasis::Mode::Reduced);
  for (const auto& r : rows) basis.insert(r);
  std::vector<SparseVec> kernel;
  for (std::uint32_t col = 0; col < ncols; ++col) {
    if (basis.rows().count(col)) continue;  // pivot column
    SparseVec k;
    // Entries at pivot columns come from the reduced rows; free columns other
    // than 'col' contribute nothing.
    std::vector<std::pair<std::uint32_t, Rat>> ent;
    for (const auto& [p, row] : basis.rows()) {
      const Rat c = row.at(col);
      if (c != 0) ent.emplace_back(p, -c);
    }
    ent.emplace_back(col, Rat(1));
    std::sort(ent.begin(), ent.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, v] : ent) k.push(c, std::move(v));
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace hesscoh
