#include "mgfil/multi_index.hpp"

#include <algorithm>

namespace mgfil {

MultiIndex MultiIndex::constant(int arity, std::int64_t v) {
  if (arity < 0) throw ArityError("negative arity");
  return MultiIndex(std::vector<std::int64_t>(static_cast<std::size_t>(arity), v));
}

MultiIndex MultiIndex::unit(int arity, int axis) {
  MultiIndex e = zero(arity);
  if (axis < 0 || axis >= arity) throw ArityError("axis out of range");
  e[axis] = 1;
  return e;
}

void require_same_arity(const MultiIndex& a, const MultiIndex& b) {
  if (a.arity() != b.arity())
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  require_same_arity(*this, o);
  MultiIndex r = *this;
  for (int i = 0; i < arity(); ++i) r[i] = checked_add(r[i], o[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  require_same_arity(*this, o);
  MultiIndex r = *this;
  for (int i = 0; i < arity(); ++i) r[i] = checked_sub(r[i], o[i]);
  return r;
}

MultiIndex MultiIndex::scaled(std::int64_t k) const {
  MultiIndex r = *this;
  for (int i = 0; i < arity(); ++i) r[i] = checked_mul(r[i], k);
  return r;
}

MultiIndex MultiIndex::plus_part() const {
  MultiIndex r = *this;
  for (int i = 0; i < arity(); ++i) r[i] = std::max<std::int64_t>(r[i], 0);
  return r;
}

std::int64_t MultiIndex::grade() const {
  std::int64_t s = 0;
  for (int i = 0; i < arity(); ++i) s = checked_add(s, (*this)[i]);
  return s;
}

bool MultiIndex::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool MultiIndex::all_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v >= 0; });
}

bool MultiIndex::all_positive() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v > 0; });
}

bool MultiIndex::leq(const MultiIndex& o) const {
  require_same_arity(*this, o);
  for (int i = 0; i < arity(); ++i)
    if ((*this)[i] > o[i]) return false;
  return true;
}

MultiIndex MultiIndex::cmax(const MultiIndex& a, const MultiIndex& b) {
  require_same_arity(a, b);
  MultiIndex r = a;
  for (int i = 0; i < a.arity(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

MultiIndex MultiIndex::cmin(const MultiIndex& a, const MultiIndex& b) {
  require_same_arity(a, b);
  MultiIndex r = a;
  for (int i = 0; i < a.arity(); ++i) r[i] = std::min(r[i], b[i]);
  return r;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  s += ")";
  return s;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
  require_same_arity(a, b);
  return std::lexicographical_compare(a.components().begin(), a.components().end(),
                                      b.components().begin(), b.components().end());
}

bool canonical_before(const MultiIndex& a, const MultiIndex& b) {
  require_same_arity(a, b);
  const std::int64_t ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  return lex_less(b, a);
}

Box::Box(MultiIndex lo, MultiIndex hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_arity(lo_, hi_);
  const int d = lo_.arity();
  stride_.assign(static_cast<std::size_t>(d), 0);
  count_ = 1;
  for (int i = d - 1; i >= 0; --i) {
    const std::int64_t side = hi_[i] - lo_[i] + 1;
    if (side <= 0) {
      count_ = 0;
      return;
    }
    stride_[static_cast<std::size_t>(i)] = count_;
    count_ = checked_mul(count_, side);
  }
}

bool Box::contains(const MultiIndex& n) const {
  require_same_arity(n, lo_);
  if (count_ == 0) return false;
  return lo_.leq(n) && n.leq(hi_);
}

std::int64_t Box::index_of(const MultiIndex& n) const {
  if (!contains(n)) throw DomainError("point " + n.str() + " outside box");
  std::int64_t k = 0;
  for (int i = 0; i < arity(); ++i)
    k += (n[i] - lo_[i]) * stride_[static_cast<std::size_t>(i)];
  return k;
}

MultiIndex Box::at(std::int64_t flat) const {
  if (flat < 0 || flat >= count_) throw DomainError("flat index outside box");
  MultiIndex n = lo_;
  for (int i = 0; i < arity(); ++i) {
    const std::int64_t side = hi_[i] - lo_[i] + 1;
    const std::int64_t q = flat / stride_[static_cast<std::size_t>(i)];
    n[i] = lo_[i] + q % side;
  }
  return n;
}

}  // namespace mgfil
