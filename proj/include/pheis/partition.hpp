#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pheis {

// A partition n_1 >= n_2 >= ... >= n_k >= 1, indexing the Fock basis state
// h(-n_1)...h(-n_k)1.  The empty partition is the vacuum.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition vacuum() { return Partition(); }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }

  int multiplicity(int n) const;
  Partition with_part(int n) const;
  /// Removes one copy of part n; nullopt if absent.
  std::optional<Partition> without_part(int n) const;
  /// Drops the first (largest) part; undefined on the vacuum.
  Partition tail() const;

  /// True when every part of sub occurs here with at least its multiplicity.
  bool contains(const Partition& sub) const;

  /// Multiset union.
  Partition merged_with(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  /// Plain lexicographic order, for use as a composite map key; canonical
  /// basis order is PartitionOrder.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  /// e.g. "h(-3) h(-1)^2 vac", "vac" for the vacuum.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Canonical order: by weight, then reverse-lexicographic within a weight
// ([4] before [3,1] before [2,2] ...).  This fixes basis listings, matrix
// layouts and serialization order.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() > b.parts();
  }
};

/// All partitions of d in canonical order; size p(d).
std::vector<Partition> partition_basis(int d);

/// Partition numbers p(0..dmax) by the pentagonal-number recurrence.
std::vector<long> partition_numbers(int dmax);

}  // namespace pheis
