#include "pheis/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pheis {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int n : parts_) {
    if (n < 1) throw std::invalid_argument("partition parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int n) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), n, std::greater<int>());
  return static_cast<int>(hi - lo);
}

Partition Partition::with_part(int n) const {
  Partition out = *this;
  auto it = std::lower_bound(out.parts_.begin(), out.parts_.end(), n, std::greater<int>());
  out.parts_.insert(it, n);
  out.weight_ += n;
  return out;
}

std::optional<Partition> Partition::without_part(int n) const {
  auto it = std::find(parts_.begin(), parts_.end(), n);
  if (it == parts_.end()) return std::nullopt;
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  out.weight_ -= n;
  return out;
}

Partition Partition::tail() const {
  Partition out = *this;
  out.parts_.erase(out.parts_.begin());
  out.weight_ -= parts_.front();
  return out;
}

bool Partition::contains(const Partition& sub) const {
  return std::includes(parts_.begin(), parts_.end(), sub.parts_.begin(), sub.parts_.end(),
                       std::greater<int>());
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<int>());
  Partition out;
  out.parts_ = std::move(merged);
  out.weight_ = weight_ + other.weight_;
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "vac";
  std::string s;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    s += "h(-" + std::to_string(parts_[i]) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    s += " ";
    i = j;
  }
  return s + "vac";
}

namespace {

void gen_partitions(int d, int maxpart, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (d == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int first = std::min(d, maxpart); first >= 1; --first) {
    stack.push_back(first);
    gen_partitions(d - first, first, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partition_basis(int d) {
  if (d < 0) throw std::invalid_argument("partition_basis: negative degree");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(d, d == 0 ? 1 : d, stack, out);
  return out;
}

std::vector<long> partition_numbers(int dmax) {
  std::vector<long> p(static_cast<std::size_t>(dmax) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= dmax; ++n) {
    long total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

}  // namespace pheis
