#pragma once

#include <cstddef>
#include <span>

namespace freiman::detail {

// In-place unnormalized Walsh–Hadamard butterfly. The caller guarantees that no
// intermediate overflows T.
template <class T>
void fwht_unchecked(std::span<T> v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      T* lo = v.data() + i;
      T* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const T a = lo[j];
        const T b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

}  // namespace freiman::detail
