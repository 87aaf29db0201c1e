#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/errors.hpp"

namespace tanaka {

// Dimension table of a graded vector space v = ⊕ v^i on a degree window
// [min_degree, max_degree]. Degrees outside the window have dimension 0.
class GradedVectorSpace {
 public:
  GradedVectorSpace() : min_degree_(-1), max_degree_(-1), dims_{0} {}

  GradedVectorSpace(int min_degree, int max_degree, std::vector<int> dims)
      : min_degree_(min_degree), max_degree_(max_degree), dims_(std::move(dims)) {
    if (min_degree_ > -1) throw ValidationError("DegreeWindowError", "min_degree must be <= -1");
    if (max_degree_ < -1) throw ValidationError("DegreeWindowError", "max_degree must be >= -1");
    if (static_cast<int>(dims_.size()) != max_degree_ - min_degree_ + 1)
      throw std::invalid_argument("dims length does not match degree window");
    for (int d : dims_)
      if (d < 0) throw std::invalid_argument("negative dimension");
    offsets_.resize(dims_.size() + 1, 0);
    for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
  }

  static GradedVectorSpace from_map(const std::map<int, int>& dims) {
    if (dims.empty()) throw std::invalid_argument("empty degree map");
    const int lo = dims.begin()->first, hi = dims.rbegin()->first;
    std::vector<int> d(static_cast<std::size_t>(hi - lo + 1), 0);
    for (auto [deg, n] : dims) d[static_cast<std::size_t>(deg - lo)] = n;
    return GradedVectorSpace(lo, hi, std::move(d));
  }

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  int dim(int degree) const {
    if (degree < min_degree_ || degree > max_degree_) return 0;
    return dims_[static_cast<std::size_t>(degree - min_degree_)];
  }

  int total_dim() const { return offsets_.back(); }

  // Flat index of (degree, offset) in the degree-ascending coordinate order.
  int flat_index(int degree, int offset) const {
    if (degree < min_degree_ || degree > max_degree_ || offset < 0 || offset >= dim(degree))
      throw std::out_of_range("basis index outside the graded window");
    return offsets_[static_cast<std::size_t>(degree - min_degree_)] + offset;
  }

  int degree_offset(int degree) const {
    if (degree < min_degree_ || degree > max_degree_)
      throw std::out_of_range("degree outside the window");
    return offsets_[static_cast<std::size_t>(degree - min_degree_)];
  }

  std::pair<int, int> degree_of(int flat) const {
    if (flat < 0 || flat >= total_dim()) throw std::out_of_range("flat index out of range");
    int d = min_degree_;
    while (flat >= offsets_[static_cast<std::size_t>(d - min_degree_ + 1)]) ++d;
    return {d, flat - offsets_[static_cast<std::size_t>(d - min_degree_)]};
  }

  bool operator==(const GradedVectorSpace& o) const {
    return min_degree_ == o.min_degree_ && max_degree_ == o.max_degree_ && dims_ == o.dims_;
  }

 private:
  int min_degree_, max_degree_;
  std::vector<int> dims_;
  std::vector<int> offsets_;
};

struct BasisIndex {
  int degree = 0;
  int offset = 0;
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.degree == b.degree && a.offset == b.offset;
  }
};

}  // namespace tanaka
