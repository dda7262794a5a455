#include "hesscoh/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "hesscoh/rational.hpp"

namespace hesscoh {

Perm Perm::identity(int n) {
  Perm p;
  p.v_.resize(n);
  for (int i = 0; i < n; ++i) p.v_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Perm Perm::from_one_line(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  Perm p;
  p.v_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = values[i];
    if (v < 1 || v > n || seen[v])
      throw Error(ErrorKind::BadParameters, "not a permutation of [n]");
    seen[v] = true;
    p.v_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::longest(int n) {
  Perm p;
  p.v_.resize(n);
  for (int i = 0; i < n; ++i) p.v_[i] = static_cast<std::uint8_t>(n - i);
  return p;
}

Perm Perm::cycle_r(int r, int n) {
  // r -> r+1 -> ... -> n -> r, fixing [1, r-1].
  Perm p = identity(n);
  for (int x = r; x < n; ++x) p.v_[x - 1] = static_cast<std::uint8_t>(x + 1);
  p.v_[n - 1] = static_cast<std::uint8_t>(r);
  return p;
}

Perm Perm::transposition(int i, int j, int n) {
  Perm p = identity(n);
  std::swap(p.v_[i - 1], p.v_[j - 1]);
  return p;
}

Perm Perm::compose(const Perm& o) const {
  Perm r;
  r.v_.resize(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[o.v_[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.v_.resize(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[v_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

Perm Perm::swap_positions(int i, int j) const {
  Perm r = *this;
  std::swap(r.v_[i - 1], r.v_[j - 1]);
  return r;
}

bool Perm::next_lex() { return std::next_permutation(v_.begin(), v_.end()); }

std::uint32_t Perm::lex_rank() const {
  const int n = size();
  std::uint32_t rank = 0;
  std::uint64_t f = factorial(n - 1);
  // Count smaller unused values to the right of each position.
  std::vector<bool> used(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 1; v < v_[i]; ++v)
      if (!used[v]) ++smaller;
    rank += static_cast<std::uint32_t>(smaller * f);
    used[v_[i]] = true;
    if (i + 1 < n) f /= (n - 1 - i);
  }
  return rank;
}

Perm Perm::from_lex_rank(std::uint32_t rank, int n) {
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  Perm p;
  p.v_.resize(n);
  std::uint64_t f = factorial(n - 1);
  for (int i = 0; i < n; ++i) {
    int idx = static_cast<int>(rank / f);
    rank = static_cast<std::uint32_t>(rank % f);
    p.v_[i] = static_cast<std::uint8_t>(avail[idx]);
    avail.erase(avail.begin() + idx);
    if (i + 1 < n) f /= (n - 1 - i);
  }
  return p;
}

std::string Perm::one_line() const {
  std::ostringstream os;
  const bool wide = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (wide && i) os << ',';
    os << static_cast<int>(v_[i]);
  }
  return os.str();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace hesscoh
