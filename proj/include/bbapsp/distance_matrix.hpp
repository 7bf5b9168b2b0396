#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bbapsp/graph.hpp"

namespace bbapsp {

// Dense n x n distances, row = source, column = target. Starts with a zero
// diagonal and +infinity everywhere else.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Weight at(VertexId from, VertexId to) const noexcept { return data_[from * n_ + to]; }
  void set(VertexId from, VertexId to, Weight w) noexcept { data_[from * n_ + to] = w; }
  std::span<const Weight> row(VertexId from) const noexcept {
    return {data_.data() + from * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> data_;
};

}  // namespace bbapsp
