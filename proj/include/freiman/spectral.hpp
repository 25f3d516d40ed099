#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"
#include "freiman/rational.hpp"

namespace freiman {

using Wide = __int128;

// Unnormalized Walsh–Hadamard transform W[γ] = Σ_x v[x] (-1)^{γ·x}, with every
// intermediate checked against 128-bit overflow. Applying it twice multiplies
// by the length.
std::vector<Wide> fwht(std::span<const Wide> values);

// Integer Fourier coefficients T(γ) = Σ_x 1_A(x) (-1)^{γ·x} of a set indicator.
// The normalized coefficient is T(γ) / 2^dim.
class Spectrum {
 public:
  int dim() const noexcept { return dim_; }
  std::uint64_t set_size() const noexcept { return set_size_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](Word gamma) const { return coeffs_.at(gamma); }
  Rational normalized(Word gamma) const {
    return Rational(BigInt(coeffs_.at(gamma)), BigInt(std::uint64_t{1} << dim_));
  }

 private:
  friend Spectrum fourier_indicator(const DenseSet& a);
  // Verifies T(0) = |A|, |T| <= |A| and Σ T² = 2^dim |A|.
  Spectrum(int dim, std::uint64_t set_size, std::vector<std::int64_t> coeffs);

  int dim_;
  std::uint64_t set_size_;
  std::vector<std::int64_t> coeffs_;
};

Spectrum fourier_indicator(const DenseSet& a);

struct PeakCharacter {
  Word gamma;
  std::int64_t coefficient;  // signed T(γ)
  std::int64_t magnitude;    // |T(γ)|
};

// Nonzero γ maximizing |T(γ)|; ties go to the smallest γ.
PeakCharacter max_nontrivial(const Spectrum& s);

// {γ : |T(γ)| / 2^dim >= threshold}, compared exactly.
PointSet large_spectrum(const DenseSet& a, const Rational& threshold);
// Same, with the threshold given by its square: {γ : (T(γ)/2^dim)^2 >= threshold_sq}.
// Lets irrational thresholds such as α^{3/2} be tested exactly.
PointSet large_spectrum_squared(const Spectrum& s, const Rational& threshold_sq);

struct Conv4Options {
  bool allow_bigint = true;
  bool force_bigint = false;
};

// Support of 1_A * 1_A * 1_A * 1_A, computed from T(γ)^4. Equals 4A = 2A - 2A.
DenseSet conv4_support(const DenseSet& a, Conv4Options options = {});

}  // namespace freiman
