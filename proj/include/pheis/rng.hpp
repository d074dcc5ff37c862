#pragma once

#include <cstdint>

#include "pheis/fock.hpp"

namespace pheis {

// Deterministic splitmix64 generator.  Standard-library distributions are
// implementation-defined, so seeded runs go through this everywhere that
// byte-identical output matters.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  int int_in(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Nonzero rational with small numerator/denominator and p-power scaling.
  Rational rational(const Prime& p, int max_abs = 9, int max_ppow = 3) {
    long num = int_in(1, max_abs) * (below(2) ? 1 : -1);
    long den = int_in(1, max_abs);
    Rational r(num, den);
    r.canonicalize();
    int e = int_in(-max_ppow, max_ppow);
    for (int i = 0; i < e; ++i) r *= p.value();
    for (int i = 0; i < -e; ++i) r /= p.value();
    return r;
  }

  Partition partition(int max_degree) {
    std::vector<int> parts;
    int remaining = int_in(0, max_degree);
    while (remaining > 0) {
      int part = int_in(1, remaining);
      parts.push_back(part);
      remaining -= part;
    }
    return Partition(parts);
  }

  /// Sparse random state of degree <= max_degree.
  FockState state(const Prime& p, int max_degree, int max_terms = 3) {
    FockState s;
    int terms = int_in(1, max_terms);
    for (int i = 0; i < terms; ++i) s.add_term(partition(max_degree), rational(p));
    if (s.is_zero()) s = FockState::vacuum();
    return s;
  }

 private:
  std::uint64_t s_;
};

}  // namespace pheis
