#pragma once

#include <cstdint>

#include "fockbridge/common.hpp"

namespace fockbridge {

/// Dense N-fold tensor power of a d-dimensional one-particle space.
/// Slot 0 is the most significant digit of the flat index.
struct TensorShape {
  int particles;
  int dim;

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int i = 0; i < particles; ++i) s *= dim;
    return s;
  }
  std::int64_t stride(int slot) const {
    std::int64_t s = 1;
    for (int i = slot + 1; i < particles; ++i) s *= dim;
    return s;
  }
};

/// Applies `op` to tensor slot `slot` of `v`, i.e. (1 x .. x op x .. x 1) v.
inline CVector apply_on_slot(const TensorShape& shape, const CMatrix& op, int slot, const CVector& v) {
  const std::int64_t total = shape.size();
  const std::int64_t stride = shape.stride(slot);
  const std::int64_t block = stride * shape.dim;
  CVector out = CVector::Zero(total);
  for (std::int64_t base = 0; base < total; base += block) {
    for (std::int64_t inner = 0; inner < stride; ++inner) {
      const std::int64_t origin = base + inner;
      for (int col = 0; col < shape.dim; ++col) {
        const Complex x = v[origin + col * stride];
        if (x == Complex(0.0)) continue;
        for (int row = 0; row < shape.dim; ++row) {
          out[origin + row * stride] += op(row, col) * x;
        }
      }
    }
  }
  return out;
}

}  // namespace fockbridge
