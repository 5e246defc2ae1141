#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unicov/group.hpp"

namespace unicov {

/// Dense subset of a finite abelian group, stored as a bit vector indexed by
/// element rank.  Set algebra is word-parallel; the group travels with the
/// set so mixed-group operations fail fast.
class GroupSet {
 public:
  explicit GroupSet(Group g)
      : group_(std::move(g)), words_((group_.order + 63) / 64, 0), card_(0) {}

  static GroupSet empty_set(const Group& g) { return GroupSet(g); }

  static GroupSet full(const Group& g) {
    GroupSet s(g);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    s.card_ = g.order;
    return s;
  }

  static GroupSet from_ranks(const Group& g, const std::vector<Elem>& ranks) {
    GroupSet s(g);
    for (Elem a : ranks) s.insert(a);
    return s;
  }

  const Group& group() const { return group_; }
  std::uint64_t order() const { return group_.order; }
  std::uint64_t size() const { return card_; }
  bool is_empty() const { return card_ == 0; }
  bool is_full() const { return card_ == group_.order; }

  bool test(Elem a) const {
    check_elem(group_, a);
    return (words_[a >> 6] >> (a & 63)) & 1;
  }

  void insert(Elem a) {
    check_elem(group_, a);
    std::uint64_t& w = words_[a >> 6];
    const std::uint64_t m = 1ull << (a & 63);
    if (!(w & m)) {
      w |= m;
      ++card_;
    }
  }

  void erase(Elem a) {
    check_elem(group_, a);
    std::uint64_t& w = words_[a >> 6];
    const std::uint64_t m = 1ull << (a & 63);
    if (w & m) {
      w &= ~m;
      --card_;
    }
  }

  std::vector<Elem> ranks() const {
    std::vector<Elem> out;
    out.reserve(card_);
    for_each([&](Elem a) { out.push_back(a); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Elem>((wi << 6) + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  /// Smallest rank in the set; throws on the empty set.
  Elem min_element() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      if (words_[wi]) {
        return static_cast<Elem>((wi << 6) +
                                 static_cast<std::size_t>(std::countr_zero(words_[wi])));
      }
    }
    throw std::invalid_argument("min_element: set is empty");
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Replaces the payload with raw words (used by the solvers); the caller is
  /// responsible for the words being trimmed to the group order.
  void assign_words(std::vector<std::uint64_t> words) {
    if (words.size() != words_.size()) {
      throw std::invalid_argument("assign_words: word count mismatch");
    }
    words_ = std::move(words);
    recount();
  }

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

  friend GroupSet intersect(GroupSet a, const GroupSet& b) {
    a.require_same_group(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
    a.recount();
    return a;
  }

  friend GroupSet unite(GroupSet a, const GroupSet& b) {
    a.require_same_group(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] |= b.words_[i];
    a.recount();
    return a;
  }

  friend GroupSet setminus(GroupSet a, const GroupSet& b) {
    a.require_same_group(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= ~b.words_[i];
    a.recount();
    return a;
  }

  friend GroupSet complement(GroupSet a) {
    for (auto& w : a.words_) w = ~w;
    a.trim();
    a.card_ = a.group_.order - a.card_;
    return a;
  }

  friend bool is_subset(const GroupSet& a, const GroupSet& b) {
    a.require_same_group(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] & ~b.words_[i]) return false;
    }
    return true;
  }

  friend bool disjoint(const GroupSet& a, const GroupSet& b) {
    a.require_same_group(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] & b.words_[i]) return false;
    }
    return true;
  }

  void require_same_group(const GroupSet& other) const {
    if (!(group_ == other.group_)) {
      throw std::invalid_argument("set operation across distinct groups");
    }
  }

 private:
  void trim() {
    const int tail = static_cast<int>(group_.order & 63);
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (1ull << tail) - 1;
    }
  }

  void recount() {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    card_ = c;
  }

  Group group_;
  std::vector<std::uint64_t> words_;
  std::uint64_t card_;
};

inline GroupSet translate(const GroupSet& a, Elem x) {
  GroupSet out(a.group());
  a.for_each([&](Elem g) { out.insert(add(a.group(), g, x)); });
  return out;
}

inline GroupSet negate_set(const GroupSet& a) {
  GroupSet out(a.group());
  a.for_each([&](Elem g) { out.insert(neg(a.group(), g)); });
  return out;
}

struct DilateResult {
  GroupSet image;
  bool unit;  // whether the dilation was by a unit (a bijection)
};

/// {lambda * a : a in A}.  Non-unit lambda is allowed; the flag records it.
inline DilateResult dilate(std::int64_t lambda, const GroupSet& a) {
  GroupSet out(a.group());
  a.for_each([&](Elem g) { out.insert(scalar_mul(a.group(), lambda, g)); });
  return {std::move(out), is_unit(a.group(), lambda)};
}

/// A + B = {a + b}.  Empty input gives the empty set.
inline GroupSet sumset(const GroupSet& a, const GroupSet& b) {
  a.require_same_group(b);
  GroupSet out(a.group());
  b.for_each([&](Elem x) { out = unite(std::move(out), translate(a, x)); });
  return out;
}

/// A - B = {a - b}.
inline GroupSet difference_set(const GroupSet& a, const GroupSet& b) {
  return sumset(a, negate_set(b));
}

/// A_X = intersection over x in X of (A + x).  Throws when X is empty (the
/// empty intersection would be all of G and is almost never what is meant).
inline GroupSet shift_intersection(const GroupSet& a, const GroupSet& x) {
  a.require_same_group(x);
  if (x.is_empty()) {
    throw std::invalid_argument("shift_intersection: X must be nonempty");
  }
  GroupSet out = GroupSet::full(a.group());
  x.for_each([&](Elem t) { out = intersect(std::move(out), translate(a, t)); });
  return out;
}

/// Shift intersection indexed by a tuple (x_1,...,x_k) rather than a set.
inline GroupSet shift_intersection_tuple(const GroupSet& a,
                                         const std::vector<Elem>& xs) {
  if (xs.empty()) {
    throw std::invalid_argument("shift_intersection_tuple: tuple is empty");
  }
  GroupSet out = GroupSet::full(a.group());
  for (Elem t : xs) out = intersect(std::move(out), translate(a, t));
  return out;
}

}  // namespace unicov
