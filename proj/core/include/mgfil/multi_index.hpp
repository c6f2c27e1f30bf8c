#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mgfil/errors.hpp"

namespace mgfil {

// Tuple of machine integers used both for exponent vectors and grading degrees.
// All arithmetic is overflow-checked.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::int64_t> c) : c_(std::move(c)) {}

  static MultiIndex zero(int arity) { return constant(arity, 0); }
  static MultiIndex ones(int arity) { return constant(arity, 1); }
  static MultiIndex constant(int arity, std::int64_t v);
  static MultiIndex unit(int arity, int axis);

  int arity() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& components() const { return c_; }

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex scaled(std::int64_t k) const;

  // Componentwise max(., 0); evaluation of filtrations factors through this.
  MultiIndex plus_part() const;

  std::int64_t grade() const;  // sum of components
  bool is_zero() const;
  bool all_nonnegative() const;
  bool all_positive() const;

  // Componentwise partial order.
  bool leq(const MultiIndex& o) const;
  bool geq(const MultiIndex& o) const { return o.leq(*this); }

  static MultiIndex cmax(const MultiIndex& a, const MultiIndex& b);
  static MultiIndex cmin(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.c_ == b.c_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  std::string str() const;  // "(a,b)"

 private:
  std::vector<std::int64_t> c_;
};

void require_same_arity(const MultiIndex& a, const MultiIndex& b);

// Strict lexicographic order on component vectors.
bool lex_less(const MultiIndex& a, const MultiIndex& b);

// Canonical total order: grade ascending, ties broken lexicographically with
// the first component dominating (so in two variables (2,0) precedes (1,1)).
bool canonical_before(const MultiIndex& a, const MultiIndex& b);

struct LexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return lex_less(a, b); }
};

struct CanonicalBefore {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return canonical_before(a, b); }
};

// Inclusive axis-aligned lattice box [lo, hi].  Row-major flattening with the
// last axis fastest; boxes with any hi[i] < lo[i] are empty.
class Box {
 public:
  Box() : count_(0) {}  // empty box of arity zero
  Box(MultiIndex lo, MultiIndex hi);
  static Box at_origin(const MultiIndex& hi) { return Box(MultiIndex::zero(hi.arity()), hi); }

  const MultiIndex& lo() const { return lo_; }
  const MultiIndex& hi() const { return hi_; }
  int arity() const { return lo_.arity(); }

  std::int64_t count() const { return count_; }
  bool contains(const MultiIndex& n) const;
  std::int64_t index_of(const MultiIndex& n) const;
  MultiIndex at(std::int64_t flat) const;

 private:
  MultiIndex lo_, hi_;
  std::vector<std::int64_t> stride_;
  std::int64_t count_;
};

}  // namespace mgfil
