#include "pheis/mode_operator.hpp"

#include <stdexcept>

namespace pheis {

void ModeOperator::add_word(NormalWord w, const Rational& c) {
  if (c == 0) return;
  if (w.annihilations.weight() > cap_) return;
  auto [it, inserted] = words_.emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) words_.erase(it);
  }
}

void ModeOperator::add_scaled(const ModeOperator& o, const Rational& c) {
  for (const auto& [w, v] : o.words_) add_word(w, c * v);
}

ModeOperator ModeOperator::with_creation(int m) const {
  ModeOperator out(cap_);
  for (const auto& [w, v] : words_) {
    out.add_word(NormalWord{w.creations.with_part(m), w.annihilations}, v);
  }
  return out;
}

ModeOperator ModeOperator::with_annihilation(int k) const {
  ModeOperator out(cap_);
  for (const auto& [w, v] : words_) {
    out.add_word(NormalWord{w.creations, w.annihilations.with_part(k)}, v);
  }
  return out;
}

ModeOperator ModeOperator::diagonal_part() const {
  ModeOperator out(cap_);
  for (const auto& [w, v] : words_) {
    if (w.diagonal()) out.add_word(w, v);
  }
  return out;
}

namespace {

// Coefficient of applying the annihilation multiset to p (the product of
// k * multiplicity over successive removals); zero when not contained.
Rational annihilation_factor(const Partition& anni, const Partition& p) {
  Rational factor(1);
  const auto& parts = anni.parts();
  for (std::size_t i = 0; i < parts.size();) {
    const int k = parts[i];
    std::size_t j = i;
    while (j < parts.size() && parts[j] == k) ++j;
    const int t = static_cast<int>(j - i);
    const int mult = p.multiplicity(k);
    if (mult < t) return Rational(0);
    for (int r = 0; r < t; ++r) factor *= Rational(static_cast<long>(k) * (mult - r));
    i = j;
  }
  return factor;
}

Partition remove_multiset(const Partition& p, const Partition& sub) {
  Partition cur = p;
  for (int k : sub.parts()) cur = *cur.without_part(k);
  return cur;
}

}  // namespace

FockState ModeOperator::apply(const Partition& p) const {
  if (p.weight() > cap_) {
    throw std::invalid_argument("ModeOperator applied beyond its degree cap");
  }
  FockState out;
  for (const auto& [w, v] : words_) {
    if (!p.contains(w.annihilations)) continue;
    Rational factor = annihilation_factor(w.annihilations, p);
    if (factor == 0) continue;
    Partition target = remove_multiset(p, w.annihilations).merged_with(w.creations);
    out.add_term(target, v * factor);
  }
  return out;
}

Rational ModeOperator::diagonal_entry(const Partition& p) const {
  if (p.weight() > cap_) {
    throw std::invalid_argument("ModeOperator applied beyond its degree cap");
  }
  Rational out(0);
  for (const auto& [w, v] : words_) {
    if (!w.diagonal()) continue;
    if (!p.contains(w.annihilations)) continue;
    out += v * annihilation_factor(w.annihilations, p);
  }
  return out;
}

const ModeOperator& ModeExpansionCache::mode(const Partition& a, int s) {
  auto key = std::make_pair(a, s);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  ModeOperator out(cap_);
  if (a.empty()) {
    if (s == -1) out.add_word(NormalWord{}, Rational(1));
  } else {
    const int n = a.parts().front();
    const Partition w = a.tail();
    // creation half: sum_{i>=0} C(n+i-1,i) h(-n-i) w(s+i)
    const int imax = cap_ + w.weight() - 1 - s;
    for (int i = 0; i <= imax; ++i) {
      const ModeOperator& child = mode(w, s + i);
      if (child.empty()) continue;
      out.add_scaled(child.with_creation(n + i), Rational(binomial(n + i - 1, i)));
    }
    // annihilation half: -(-1)^n sum_{i>=1} C(n+i-1,i) w(s-n-i) h(i)
    const Rational sign((n % 2 == 0) ? -1 : 1);
    for (int i = 1; i <= cap_; ++i) {
      const ModeOperator& child = mode(w, s - n - i);
      if (child.empty()) continue;
      out.add_scaled(child.with_annihilation(i), sign * Rational(binomial(n + i - 1, i)));
    }
  }
  auto [ins, ok] = memo_.emplace(std::move(key), std::move(out));
  (void)ok;
  return ins->second;
}

RationalMatrix zero_mode_matrix(const FockState& a, int d) {
  if (d < 0) throw std::invalid_argument("zero_mode_matrix: negative degree");
  auto wt = a.homogeneous_degree();
  if (!wt && !a.is_zero()) {
    throw std::invalid_argument("zero_mode_matrix: state is not L(0)-homogeneous");
  }

  const auto basis = partition_basis(d);
  const int n = static_cast<int>(basis.size());
  std::map<Partition, int, PartitionOrder> index;
  for (int i = 0; i < n; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);

  RationalMatrix m;
  m.rows = m.cols = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, Rational(0));
  if (a.is_zero()) return m;

  ModeExpansionCache cache(d);
  for (int j = 0; j < n; ++j) {
    FockState image;
    for (const auto& [mono, c] : a.terms()) {
      FockState part = cache.zero_mode(mono).apply(basis[static_cast<std::size_t>(j)]);
      part *= c;
      image += part;
    }
    for (const auto& [p, c] : image.terms()) {
      m.at(index.at(p), j) = c;
    }
  }
  return m;
}

}  // namespace pheis
