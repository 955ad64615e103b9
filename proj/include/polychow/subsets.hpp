#ifndef POLYCHOW_SUBSETS_HPP
#define POLYCHOW_SUBSETS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polychow {

/// Sorted set of distinct 0-based indices.
class IndexSubset {
 public:
  IndexSubset() = default;
  IndexSubset(std::initializer_list<size_t> xs) : IndexSubset(std::vector<size_t>(xs)) {}
  explicit IndexSubset(std::vector<size_t> xs) : idx_(std::move(xs)) {
    for (size_t i = 1; i < idx_.size(); ++i)
      if (idx_[i - 1] >= idx_[i])
        throw std::invalid_argument("IndexSubset: indices must be strictly increasing");
  }

  // Sorts and validates distinctness; for inputs in arbitrary order.
  static IndexSubset from_unsorted(std::vector<size_t> xs) {
    std::sort(xs.begin(), xs.end());
    return IndexSubset(std::move(xs));
  }

  /// {0, 1, ..., n-1}
  static IndexSubset range(size_t n) {
    std::vector<size_t> xs(n);
    for (size_t i = 0; i < n; ++i) xs[i] = i;
    return IndexSubset(std::move(xs));
  }

  size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  size_t operator[](size_t i) const { return idx_[i]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<size_t>& indices() const { return idx_; }

  bool contains(size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

  bool within(size_t ground) const { return idx_.empty() || idx_.back() < ground; }

  bool includes(const IndexSubset& other) const {
    return std::includes(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end());
  }

  bool disjoint(const IndexSubset& other) const {
    for (size_t i : other.idx_)
      if (contains(i)) return false;
    return true;
  }

  IndexSubset set_union(const IndexSubset& other) const {
    std::vector<size_t> out;
    std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                   std::back_inserter(out));
    return IndexSubset(std::move(out));
  }

  IndexSubset set_difference(const IndexSubset& other) const {
    std::vector<size_t> out;
    std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                        std::back_inserter(out));
    return IndexSubset(std::move(out));
  }

  IndexSubset set_intersection(const IndexSubset& other) const {
    std::vector<size_t> out;
    std::set_intersection(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                          std::back_inserter(out));
    return IndexSubset(std::move(out));
  }

  IndexSubset complement(size_t ground) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < ground; ++i)
      if (!contains(i)) out.push_back(i);
    return IndexSubset(std::move(out));
  }

  // 1-based compact name: {0,1} -> "12". Grounds beyond 9 use commas.
  std::string name(size_t ground = 9) const {
    std::string s;
    for (size_t k = 0; k < idx_.size(); ++k) {
      if (k && ground > 9) s += ",";
      s += std::to_string(idx_[k] + 1);
    }
    return s;
  }

  auto operator<=>(const IndexSubset&) const = default;

 private:
  std::vector<size_t> idx_;
};

/// Calls fn(positions) for every k-combination of {0..n-1}, in lexicographic order.
inline void for_each_combination(size_t n, size_t k,
                                 const std::function<void(const std::vector<size_t>&)>& fn) {
  if (k > n) return;
  std::vector<size_t> c(k);
  for (size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    fn(c);
    if (k == 0) return;
    size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// All k-subsets of [0, n) in lexicographic order.
inline std::vector<IndexSubset> k_subsets(size_t n, size_t k) {
  std::vector<IndexSubset> out;
  for_each_combination(n, k, [&](const std::vector<size_t>& c) { out.emplace_back(c); });
  return out;
}

inline size_t binomial(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace polychow

#endif  // POLYCHOW_SUBSETS_HPP
