#pragma once

#include <map>
#include <utility>

#include "pheis/modes.hpp"

namespace pheis {

// A normal-ordered word h(-m_1)...h(-m_j) h(k_1)...h(k_l): creation factors
// to the left, annihilation factors to the right.  Factors of equal kind
// commute, so each side is a multiset.
struct NormalWord {
  Partition creations;
  Partition annihilations;

  bool diagonal() const { return creations == annihilations; }

  friend bool operator==(const NormalWord& a, const NormalWord& b) {
    return a.creations == b.creations && a.annihilations == b.annihilations;
  }
  friend bool operator<(const NormalWord& a, const NormalWord& b) {
    if (!(a.creations == b.creations)) return a.creations.parts() < b.creations.parts();
    return a.annihilations.parts() < b.annihilations.parts();
  }
};

// An operator on the degree-capped space V_{<= cap}, stored as an exact
// rational combination of normal-ordered words.  Words whose annihilation
// weight exceeds the cap vanish on the whole space and are dropped as they
// arise; everything kept is exact.
class ModeOperator {
 public:
  using WordMap = std::map<NormalWord, Rational>;

  explicit ModeOperator(int degree_cap) : cap_(degree_cap) {}

  int degree_cap() const { return cap_; }
  const WordMap& words() const { return words_; }
  bool empty() const { return words_.empty(); }

  void add_word(NormalWord w, const Rational& c);
  void add_scaled(const ModeOperator& o, const Rational& c);

  /// h(-m) composed on the left; stays normal-ordered.
  ModeOperator with_creation(int m) const;
  /// h(k) composed on the right; stays normal-ordered.
  ModeOperator with_annihilation(int k) const;

  /// Only the words with equal creation and annihilation multisets (the part
  /// of the operator visible on matrix diagonals).
  ModeOperator diagonal_part() const;

  /// Exact action on a basis partition of weight <= degree_cap().
  FockState apply(const Partition& p) const;

  /// <p| this |p>, exact.
  Rational diagonal_entry(const Partition& p) const;

 private:
  int cap_;
  WordMap words_;
};

// Memoized expansions of composite modes of basis monomials as normal-ordered
// word sums, built by the same r = 0 Jacobi recursion as ModeCalculator but
// at the operator level.  All expansions share one degree cap.
class ModeExpansionCache {
 public:
  explicit ModeExpansionCache(int degree_cap) : cap_(degree_cap) {}

  int degree_cap() const { return cap_; }

  /// Expansion of the mode a(s) of the basis monomial a, valid on V_{<= cap}.
  const ModeOperator& mode(const Partition& a, int s);

  /// Zero mode o(a) = a(wt(a) - 1).
  const ModeOperator& zero_mode(const Partition& a) {
    return mode(a, a.weight() - 1);
  }

 private:
  int cap_;
  std::map<std::pair<Partition, int>, ModeOperator> memo_;
};

}  // namespace pheis
