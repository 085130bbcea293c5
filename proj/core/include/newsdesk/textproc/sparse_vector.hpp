#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace newsdesk::textproc {

/// Sorted (index, weight) pairs. Indices strictly increase and no stored
/// weight is zero.
class SparseVector {
 public:
  struct Entry {
    std::uint32_t index;
    double weight;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;

  /// Accepts entries in any order; duplicate indices are summed and zeros
  /// dropped.
  static SparseVector from_unsorted(std::vector<Entry> entries);

  /// Dense to sparse, dropping zeros.
  static SparseVector from_dense(std::span<const double> dense);

  std::span<const Entry> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  double weight(std::uint32_t index) const noexcept;
  double norm() const noexcept;
  double dot(const SparseVector& other) const noexcept;

  /// Unit L2 norm copy; the empty vector stays empty.
  SparseVector normalized() const;
  SparseVector scaled(double factor) const;

  /// Largest index + 1, or 0 when empty.
  std::uint32_t extent() const noexcept;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  explicit SparseVector(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}
  std::vector<Entry> entries_;
};

/// Dot product of two L2-normalized vectors, i.e. their cosine similarity.
/// Zero when either is empty. Symmetric.
double cosine(const SparseVector& a, const SparseVector& b) noexcept;

/// Accumulates a sum of sparse vectors; `mean()` divides by the count.
class SparseAccumulator {
 public:
  void add(const SparseVector& v);
  std::size_t count() const noexcept { return count_; }
  SparseVector sum() const;
  SparseVector mean() const;

 private:
  std::vector<std::pair<std::uint32_t, double>> pending_;
  std::size_t count_ = 0;
};

}  // namespace newsdesk::textproc
