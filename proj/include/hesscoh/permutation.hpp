#ifndef HESSCOH_PERMUTATION_HPP
#define HESSCOH_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hesscoh {

// Element of S_n in one-line notation. Values are 1-based; w(i) for i in [n].
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  static Perm from_one_line(std::vector<int> values);  // validates bijection
  static Perm longest(int n);                          // w_0 = n n-1 ... 1
  static Perm cycle_r(int r, int n);                   // (r r+1 ... n)
  static Perm transposition(int i, int j, int n);

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_[i - 1]; }  // i in [n]

  Perm compose(const Perm& o) const;  // (this o other)(i) = this(other(i))
  Perm inverse() const;
  // Right multiplication by the transposition (i j): swaps positions i and j.
  Perm swap_positions(int i, int j) const;

  bool next_lex();  // std::next_permutation order; false after wrapping

  // Rank in lexicographic order of all of S_n (factoradic), 0-based.
  std::uint32_t lex_rank() const;
  static Perm from_lex_rank(std::uint32_t rank, int n);

  std::string one_line() const;  // "132"; comma-separated when n > 9

  bool operator==(const Perm& o) const { return v_ == o.v_; }
  bool operator!=(const Perm& o) const { return v_ != o.v_; }
  bool operator<(const Perm& o) const { return v_ < o.v_; }

  const std::vector<std::uint8_t>& data() const { return v_; }

 private:
  std::vector<std::uint8_t> v_;
};

std::uint64_t factorial(int n);

// Applies fn to every w in S_n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& fn) {
  Perm w = Perm::identity(n);
  do {
    fn(w);
  } while (w.next_lex());
}

}  // namespace hesscoh

#endif
