#include "hesscoh/hessenberg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hesscoh {

HessenbergFunction HessenbergFunction::validate(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw Error(ErrorKind::BadParameters, "empty value sequence");
  for (int j = 1; j <= n; ++j) {
    if (j > 1 && values[j - 1] < values[j - 2])
      throw Error(ErrorKind::NotMonotone,
                  "h(" + std::to_string(j) + ") < h(" + std::to_string(j - 1) + ")");
    if (values[j - 1] < j)
      throw Error(ErrorKind::BelowDiagonal,
                  "h(" + std::to_string(j) + ") = " + std::to_string(values[j - 1]) +
                      " < " + std::to_string(j));
    if (values[j - 1] > n)
      throw Error(ErrorKind::OutOfRange,
                  "h(" + std::to_string(j) + ") = " + std::to_string(values[j - 1]) +
                      " > n = " + std::to_string(n));
  }
  return HessenbergFunction(std::move(values));
}

std::string HessenbergFunction::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ',';
    os << v_[i];
  }
  return os.str();
}

HessenbergFunction HessenbergFunction::parse(const std::string& s) {
  std::vector<int> vals;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorKind::ParseError, "empty entry in '" + s + "'");
    vals.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur.push_back(ch);
    } else if (ch != ' ') {
      throw Error(ErrorKind::ParseError, "bad character in '" + s + "'");
    }
  }
  flush();
  return validate(std::move(vals));
}

bool is_connected(const HessenbergFunction& h) {
  for (int j = 1; j < h.size(); ++j)
    if (h(j) < j + 1) return false;
  return true;
}

int dimension(const HessenbergFunction& h) {
  int d = 0;
  for (int j = 1; j <= h.size(); ++j) d += h(j) - j;
  return d;
}

BottomEll bottom_and_ell_sets(const HessenbergFunction& h) {
  const int n = h.size();
  auto at = [&](int j) { return j == 0 ? 1 : h(j); };  // h(0) = 1
  BottomEll r;
  for (int j = 1; j <= n - 1; ++j) {
    if (at(j - 1) == j + 1 && at(j) == j + 1) r.bottom.insert(j);
    if (at(j - 1) == j && at(j) == j + 1) r.ell.insert(j);
  }
  return r;
}

int h_star(const HessenbergFunction& h, int i) {
  const int n = h.size();
  if (i < 1 || i > n) throw Error(ErrorKind::BadParameters, "row index out of range");
  for (int j = 1; j <= n; ++j)
    if (h(j) >= i) return j;
  return n;  // unreachable, h(n) = n >= i
}

HessenbergFunction minor(const HessenbergFunction& h, int j) {
  const int n = h.size();
  if (n < 2) throw Error(ErrorKind::SizeTooSmall, "no minors at size 1");
  if (j < 1 || j > n) throw Error(ErrorKind::BadParameters, "column index out of range");
  std::vector<int> out(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    if (i < j)
      out[i - 1] = h(i) < j ? h(i) : h(i) - 1;
    else
      out[i - 1] = h(i + 1) - 1;
  }
  return HessenbergFunction::validate(std::move(out));
}

HessenbergFunction flip(const HessenbergFunction& h) {
  const int n = h.size();
  // Box (i,j) of the flipped diagram is box (n+1-j, n+1-i) of the original.
  std::vector<std::vector<bool>> box(n + 1, std::vector<bool>(n + 1, false));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= h(j); ++i) box[n + 1 - j][n + 1 - i] = true;
  std::vector<int> out(n, 0);
  for (int j = 1; j <= n; ++j) {
    int top = 0;
    for (int i = 1; i <= n; ++i)
      if (box[i][j]) top = i;
    // Shading must stay a top-aligned column segment.
    for (int i = 1; i <= top; ++i)
      if (!box[i][j]) throw Error(ErrorKind::BadParameters, "flip produced a gap");
    out[j - 1] = top;
  }
  return HessenbergFunction::validate(std::move(out));
}

HessenbergFunction lollipop_function(int a, int b, int n) {
  if (!(1 <= a && a < b && b <= n))
    throw Error(ErrorKind::BadParameters, "need 1 <= a < b <= n");
  std::vector<int> v(n);
  for (int j = 1; j <= n; ++j)
    v[j - 1] = j <= a ? a + 1 : (j < b ? j + 1 : n);
  return HessenbergFunction::validate(std::move(v));
}

std::optional<LollipopShape> lollipop_form(const HessenbergFunction& h) {
  const int n = h.size();
  const int a = h(1) - 1;
  int b = n + 1;
  for (int j = 1; j <= n; ++j)
    if (h(j) == n) {
      b = j;
      break;
    }
  if (b <= a) b = a + 1;
  if (!(1 <= a && a < b && b <= n)) return std::nullopt;
  for (int j = 1; j <= n; ++j) {
    const int want = j <= a ? a + 1 : (j < b ? j + 1 : n);
    if (h(j) != want) return std::nullopt;
  }
  return LollipopShape{a, b};
}

namespace {

bool in_forbidden_family(const std::vector<int>& v) {
  const int m = static_cast<int>(v.size());
  if (m < 4) return false;
  // (alpha, beta, ..., beta) with 3 <= alpha < beta; validity forces beta = m.
  {
    bool ok = v[0] >= 3 && v[0] < m;
    for (int i = 1; ok && i < m; ++i) ok = v[i] == m;
    if (ok) return true;
  }
  // (beta-1, ..., beta-1, beta, ..., beta) with alpha >= 3 trailing betas.
  {
    int alpha = 0;
    while (alpha < m && v[m - 1 - alpha] == m) ++alpha;
    if (alpha >= 3 && alpha < m) {
      bool ok = true;
      for (int i = 0; ok && i < m - alpha; ++i) ok = v[i] == m - 1;
      if (ok) return true;
    }
  }
  // (2, gamma-1, ..., gamma-1, gamma, gamma) with gamma = m >= 5.
  if (m >= 5 && v[0] == 2 && v[m - 1] == m && v[m - 2] == m) {
    bool ok = true;
    for (int i = 1; ok && i < m - 2; ++i) ok = v[i] == m - 1;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool has_forbidden_minor(const HessenbergFunction& h) {
  std::set<std::vector<int>> seen;
  std::deque<HessenbergFunction> queue{h};
  seen.insert(h.values());
  while (!queue.empty()) {
    HessenbergFunction cur = queue.front();
    queue.pop_front();
    if (in_forbidden_family(cur.values())) return true;
    if (cur.size() < 2) continue;
    for (int j : {1, cur.size()}) {
      HessenbergFunction m = minor(cur, j);
      if (seen.insert(m.values()).second) queue.push_back(m);
    }
  }
  return false;
}

namespace {

void enumerate_rec(int n, int j, int prev, bool connected_only, std::vector<int>& cur,
                   std::vector<HessenbergFunction>& out) {
  if (j > n) {
    out.push_back(HessenbergFunction::validate(cur));
    return;
  }
  int lo = std::max(j, prev);
  if (connected_only && j < n) lo = std::max(lo, j + 1);
  for (int v = lo; v <= n; ++v) {
    if (j == n && v != n) continue;
    cur.push_back(v);
    enumerate_rec(n, j + 1, v, connected_only, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool connected_only) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "n must be positive");
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  enumerate_rec(n, 1, 1, connected_only, cur, out);
  return out;
}

Decomposition decompose_disconnected(const HessenbergFunction& h) {
  const int n = h.size();
  int k = 0;
  for (int j = 1; j < n; ++j)
    if (h(j) == j) {
      k = j;
      break;
    }
  if (k == 0) throw Error(ErrorKind::AlreadyConnected, h.to_string());
  std::vector<int> left(h.values().begin(), h.values().begin() + k);
  std::vector<int> right;
  for (int j = k + 1; j <= n; ++j) right.push_back(h(j) - k);
  return Decomposition{HessenbergFunction::validate(std::move(left)),
                       HessenbergFunction::validate(std::move(right)), binomial(n, k)};
}

int box_count_below_diagonal(const HessenbergFunction& h) {
  int c = 0;
  for (int j = 1; j <= h.size(); ++j)
    for (int i = j + 1; i <= h(j); ++i) ++c;
  return c;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hesscoh
