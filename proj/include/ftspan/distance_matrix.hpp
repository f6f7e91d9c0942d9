#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ftspan {

// Dense identifier of a point; ids are assigned in input order.
using PointId = std::uint32_t;

// Row-major symmetric n x n table. The element type is a template parameter so
// the exact (rational) lower-bound instances reuse the same constructions.
template <class T>
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, T fill = T{})
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  T& operator()(PointId p, PointId q) { return data_[p * n_ + q]; }
  const T& operator()(PointId p, PointId q) const { return data_[p * n_ + q]; }

  std::span<const T> row(PointId p) const {
    return {data_.data() + static_cast<std::size_t>(p) * n_, n_};
  }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace ftspan
