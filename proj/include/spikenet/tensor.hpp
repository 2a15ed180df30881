#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spikenet/errors.hpp"

namespace spikenet {

// Dense 3-D tensor, C-order [c][h][w].
struct Tensor3 {
  int c = 0, h = 0, w = 0;
  std::vector<double> v;

  Tensor3() = default;
  Tensor3(int c_, int h_, int w_)
      : c(c_), h(h_), w(w_), v(static_cast<std::size_t>(c_) * h_ * w_, 0.0) {}

  std::size_t size() const { return v.size(); }
  double* data() { return v.data(); }
  const double* data() const { return v.data(); }

  double& at(int ci, int y, int x) {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }
  double at(int ci, int y, int x) const {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }

  void zero() { std::fill(v.begin(), v.end(), 0.0); }

  bool same_shape(const Tensor3& o) const { return c == o.c && h == o.h && w == o.w; }
};

// Read-only view of one binary spike map [c][h][w], values 0/1.
struct SpikeView {
  const std::uint8_t* data = nullptr;
  int c = 0, h = 0, w = 0;

  std::size_t size() const { return static_cast<std::size_t>(c) * h * w; }
  std::uint8_t at(int ci, int y, int x) const {
    return data[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }
};

}  // namespace spikenet
