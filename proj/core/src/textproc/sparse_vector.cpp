#include "newsdesk/textproc/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

namespace newsdesk::textproc {

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.weight == 0.0; });
  return SparseVector(std::move(merged));
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return SparseVector(std::move(out));
}

double SparseVector::weight(std::uint32_t index) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->weight : 0.0;
}

double SparseVector::norm() const noexcept {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight * e.weight;
  return std::sqrt(s);
}

double SparseVector::dot(const SparseVector& other) const noexcept {
  double s = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      s += a->weight * b->weight;
      ++a;
      ++b;
    }
  }
  return s;
}

SparseVector SparseVector::normalized() const {
  const double n = norm();
  if (n == 0.0) return {};
  return scaled(1.0 / n);
}

SparseVector SparseVector::scaled(double factor) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    const double w = e.weight * factor;
    if (w != 0.0) out.push_back({e.index, w});
  }
  return SparseVector(std::move(out));
}

std::uint32_t SparseVector::extent() const noexcept {
  return entries_.empty() ? 0 : entries_.back().index + 1;
}

double cosine(const SparseVector& a, const SparseVector& b) noexcept {
  if (a.empty() || b.empty()) return 0.0;
  // Summation order is fixed by index, so the result is bitwise symmetric.
  return a.dot(b);
}

void SparseAccumulator::add(const SparseVector& v) {
  for (const auto& e : v.entries()) pending_.emplace_back(e.index, e.weight);
  ++count_;
}

SparseVector SparseAccumulator::sum() const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(pending_.size());
  for (const auto& [i, w] : pending_) entries.push_back({i, w});
  return SparseVector::from_unsorted(std::move(entries));
}

SparseVector SparseAccumulator::mean() const {
  if (count_ == 0) return {};
  return sum().scaled(1.0 / static_cast<double>(count_));
}

}  // namespace newsdesk::textproc
