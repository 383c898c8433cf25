#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avn/errors.hpp"

namespace avn {

/// Fixed-capacity bit sequence with an explicit length.
///
/// Bit i is stored at bit i of a single machine word, so comparing two
/// Bitvecs of equal length is the same as comparing the subsets they
/// indicate in ascending numeric order. Binary operations between
/// Bitvecs of different length throw ContractViolation.
class Bitvec {
 public:
  static constexpr std::size_t kCapacity = 64;

  Bitvec() = default;

  explicit Bitvec(std::size_t size, std::uint64_t word = 0) : word_(word), size_(check_size(size)) {
    if (size_ < kCapacity && (word_ >> size_) != 0) {
      throw ContractViolation("Bitvec: word has bits set beyond length " + std::to_string(size_));
    }
  }

  static Bitvec from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    Bitvec v(size);
    for (auto i : indices) v.set(i);
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  std::uint64_t word() const noexcept { return word_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (word_ >> i) & 1u;
  }

  Bitvec& set(std::size_t i, bool value = true) {
    check_index(i);
    if (value) {
      word_ |= bit(i);
    } else {
      word_ &= ~bit(i);
    }
    return *this;
  }

  Bitvec& flip(std::size_t i) {
    check_index(i);
    word_ ^= bit(i);
    return *this;
  }

  int popcount() const noexcept { return std::popcount(word_); }
  bool any() const noexcept { return word_ != 0; }
  bool none() const noexcept { return word_ == 0; }

  // Parity of the bits selected by `mask`.
  bool parity(const Bitvec& mask) const {
    check_same(mask);
    return std::popcount(word_ & mask.word_) & 1;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t w = word_; w != 0; w &= w - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
    }
    return out;
  }

  Bitvec& operator^=(const Bitvec& other) {
    check_same(other);
    word_ ^= other.word_;
    return *this;
  }
  Bitvec& operator&=(const Bitvec& other) {
    check_same(other);
    word_ &= other.word_;
    return *this;
  }
  Bitvec& operator|=(const Bitvec& other) {
    check_same(other);
    word_ |= other.word_;
    return *this;
  }

  friend Bitvec operator^(Bitvec a, const Bitvec& b) { return a ^= b; }
  friend Bitvec operator&(Bitvec a, const Bitvec& b) { return a &= b; }
  friend Bitvec operator|(Bitvec a, const Bitvec& b) { return a |= b; }

  friend bool operator==(const Bitvec&, const Bitvec&) = default;
  friend std::strong_ordering operator<=>(const Bitvec& a, const Bitvec& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.word_ <=> b.word_;
  }

  // Bit 0 first, e.g. "1010".
  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if ((word_ >> i) & 1u) s[i] = '1';
    }
    return s;
  }

 private:
  static std::size_t check_size(std::size_t size) {
    if (size > kCapacity) {
      throw ContractViolation("Bitvec: length " + std::to_string(size) + " exceeds capacity 64");
    }
    return size;
  }
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  void check_index(std::size_t i) const {
    if (i >= size_) {
      throw ContractViolation("Bitvec: index " + std::to_string(i) + " out of range for length " +
                              std::to_string(size_));
    }
  }
  void check_same(const Bitvec& other) const {
    if (other.size_ != size_) {
      throw ContractViolation("Bitvec: length mismatch (" + std::to_string(size_) + " vs " +
                              std::to_string(other.size_) + ")");
    }
  }

  std::uint64_t word_ = 0;
  std::size_t size_ = 0;
};

/// Linear system over GF(2): each row is `coeffs . x = rhs`.
class Gf2System {
 public:
  struct Row {
    Bitvec coeffs;
    bool rhs = false;
  };

  Gf2System() = default;
  explicit Gf2System(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars > Bitvec::kCapacity) {
      throw ContractViolation("Gf2System: at most 64 variables are supported");
    }
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  Gf2System& add_row(Bitvec coeffs, bool rhs) {
    if (coeffs.size() != num_vars_) {
      throw ContractViolation("Gf2System: row of length " + std::to_string(coeffs.size()) +
                              " in a system over " + std::to_string(num_vars_) + " variables");
    }
    rows_.push_back({coeffs, rhs});
    return *this;
  }

  // Shorthand for `x_var = value`.
  Gf2System& fix(std::size_t var, bool value) {
    Bitvec c(num_vars_);
    c.set(var);
    return add_row(c, value);
  }

  // Evaluates every row at `x`.
  bool satisfied_by(const Bitvec& x) const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Row& r) { return r.coeffs.parity(x) == r.rhs; });
  }

 private:
  std::size_t num_vars_ = 0;
  std::vector<Row> rows_;
};

/// Outcome of Gauss-Jordan elimination.
///
/// Exactly one of `solution` / `conflict` is meaningful: when the system is
/// inconsistent, `conflict` lists the original row indices whose sum is the
/// contradiction `0 = 1`.
struct Gf2Result {
  std::optional<Bitvec> solution;
  std::vector<std::size_t> conflict;

  bool consistent() const noexcept { return solution.has_value(); }
};

namespace detail {

// Row-combination tracker; systems here can have more rows than a word holds.
class RowSet {
 public:
  RowSet() = default;
  RowSet(std::size_t rows, std::size_t seed) : blocks_((rows + 63) / 64, 0) {
    blocks_[seed / 64] |= std::uint64_t{1} << (seed % 64);
  }
  RowSet& operator^=(const RowSet& o) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] ^= o.blocks_[k];
    return *this;
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      for (std::uint64_t w = blocks_[k]; w != 0; w &= w - 1) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> blocks_;
};

}  // namespace detail

/// Solves `system` by Gauss-Jordan elimination, pivoting on the lowest
/// available column and setting free variables to 0. Deterministic.
inline Gf2Result gf2_analyze(const Gf2System& system) {
  struct Work {
    std::uint64_t coeffs;
    bool rhs;
    detail::RowSet combo;
  };
  const auto& rows = system.rows();
  std::vector<Work> work;
  work.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    work.push_back({rows[r].coeffs.word(), rows[r].rhs, detail::RowSet(rows.size(), r)});
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < system.num_vars() && pivot < work.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t r = pivot;
    while (r < work.size() && !(work[r].coeffs & bit)) ++r;
    if (r == work.size()) continue;
    std::swap(work[r], work[pivot]);
    for (std::size_t k = 0; k < work.size(); ++k) {
      if (k != pivot && (work[k].coeffs & bit)) {
        work[k].coeffs ^= work[pivot].coeffs;
        work[k].rhs ^= work[pivot].rhs;
        work[k].combo ^= work[pivot].combo;
      }
    }
    pivot_cols.push_back(col);
    ++pivot;
  }

  Gf2Result result;
  for (std::size_t r = pivot; r < work.size(); ++r) {
    if (work[r].rhs) {
      result.conflict = work[r].combo.indices();
      return result;
    }
  }
  Bitvec x(system.num_vars());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x.set(pivot_cols[k], work[k].rhs);
  result.solution = x;
  return result;
}

/// Any solution of `system`, or nullopt if it is inconsistent.
inline std::optional<Bitvec> gf2_solve(const Gf2System& system) { return gf2_analyze(system).solution; }

}  // namespace avn
