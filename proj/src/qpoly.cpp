#include "hesscoh/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hesscoh {

QPoly::QPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Int coeff, int power) {
  QPoly p;
  if (coeff == 0) return p;
  p.c_.assign(power + 1, Int(0));
  p.c_[power] = std::move(coeff);
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& QPoly::coeff(int i) const {
  static const Int zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Int QPoly::eval_at_one() const {
  Int s(0);
  for (const auto& a : c_) s += a;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::operator*(const Int& s) const {
  QPoly r = *this;
  for (auto& a : r.c_) a *= s;
  r.trim();
  return r;
}

QPoly QPoly::truncated(int k) const {
  QPoly r;
  r.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), std::max(k, 0)));
  r.trim();
  return r;
}

bool QPoly::congruent_mod_qk(const QPoly& o, int k) const {
  return truncated(k) == o.truncated(k);
}

bool QPoly::is_palindromic() const {
  const std::size_t m = c_.size();
  for (std::size_t i = 0; i < m / 2; ++i)
    if (c_[i] != c_[m - 1 - i]) return false;
  return true;
}

std::string QPoly::serialize() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

std::string QPoly::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) os << '-', a = -a;
      first = false;
    } else {
      os << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << 'q';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

QPoly QPoly::parse(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorKind::ParseError, "empty coefficient in '" + s + "'");
    out.emplace_back(cur);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
      cur.push_back(ch);
    } else if (ch != ' ') {
      throw Error(ErrorKind::ParseError, "bad character in polynomial '" + s + "'");
    }
  }
  flush();
  return QPoly(std::move(out));
}

QPoly q_int(int m) {
  if (m < 0) throw Error(ErrorKind::BadParameters, "q_int needs m >= 0");
  std::vector<Int> c(m, Int(1));
  return QPoly(std::move(c));
}

QPoly q_fact(int m) {
  if (m < 0) throw Error(ErrorKind::BadParameters, "q_fact needs m >= 0");
  QPoly r(Int(1));
  for (int j = 1; j <= m; ++j) r = r * q_int(j);
  return r;
}

}  // namespace hesscoh
