#include "freiman/spectral.hpp"

#include <bit>
#include <cstdlib>

#include "freiman/detail/fwht_kernel.hpp"
#include "freiman/errors.hpp"

namespace freiman {

namespace {

BigInt to_big(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

// Number of 4-tuples of A summing to each point, from the inverse transform
// of T^4 (which equals 2^m times the count).
template <class T>
DenseSet conv4_from(const Spectrum& spectrum, const T& set_size) {
  const int m = spectrum.dim();
  const std::size_t n = std::size_t{1} << m;
  std::vector<T> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const T t = spectrum.coeffs()[i];
    const T sq = t * t;
    g[i] = sq * sq;
  }
  detail::fwht_unchecked<T>(std::span<T>(g));
  DenseSet out(m);
  T total = 0;
  const T unit = T(1) << m;
  for (std::size_t i = 0; i < n; ++i) {
    FREIMAN_ENSURE(g[i] % unit == 0, "4-fold convolution value is not an integer tuple count");
    const T count = g[i] / unit;
    FREIMAN_ENSURE(count >= 0, "negative 4-fold convolution count");
    total += count;
    if (count > 0) out.insert(i);
  }
  const T s2 = set_size * set_size;
  FREIMAN_ENSURE(total == s2 * s2, "4-fold convolution mass differs from |A|^4");
  return out;
}

}  // namespace

std::vector<Wide> fwht(std::span<const Wide> values) {
  const std::size_t n = values.size();
  if (n == 0 || !std::has_single_bit(n)) throw InvalidArgument("fwht length must be a power of two");
  std::vector<Wide> v(values.begin(), values.end());
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        Wide sum, diff;
        if (__builtin_add_overflow(v[j], v[j + h], &sum) || __builtin_sub_overflow(v[j], v[j + h], &diff))
          throw OverflowError("fwht intermediate exceeds 128-bit range");
        v[j] = sum;
        v[j + h] = diff;
      }
    }
  }
  return v;
}

Spectrum::Spectrum(int dim, std::uint64_t set_size, std::vector<std::int64_t> coeffs)
    : dim_(dim), set_size_(set_size), coeffs_(std::move(coeffs)) {
  FREIMAN_ENSURE(coeffs_.size() == (std::size_t{1} << dim_), "spectrum length is not 2^dim");
  FREIMAN_ENSURE(static_cast<std::uint64_t>(coeffs_[0]) == set_size_, "T(0) differs from |A|");
  Wide energy = 0;
  for (std::int64_t t : coeffs_) {
    FREIMAN_ENSURE(static_cast<std::uint64_t>(std::llabs(t)) <= set_size_, "|T(γ)| exceeds |A|");
    energy += static_cast<Wide>(t) * t;
  }
  FREIMAN_ENSURE(energy == (static_cast<Wide>(set_size_) << dim_), "Parseval identity fails");
}

Spectrum fourier_indicator(const DenseSet& a) {
  std::vector<std::int64_t> t(a.universe_size(), 0);
  a.for_each([&](Word x) { t[x] = 1; });
  // |partial sums| never exceed 2^dim.
  detail::fwht_unchecked<std::int64_t>(t);
  return Spectrum(a.dim(), a.size(), std::move(t));
}

PeakCharacter max_nontrivial(const Spectrum& s) {
  if (s.dim() < 1) throw InvalidArgument("no nontrivial character in a 0-dimensional space");
  const auto c = s.coeffs();
  Word best = 1;
  for (Word g = 2; g < c.size(); ++g)
    if (std::llabs(c[g]) > std::llabs(c[best])) best = g;
  return {best, c[best], std::llabs(c[best])};
}

PointSet large_spectrum(const DenseSet& a, const Rational& threshold) {
  if (threshold <= 0) throw InvalidArgument("large spectrum threshold must be positive");
  return large_spectrum_squared(fourier_indicator(a), threshold * threshold);
}

PointSet large_spectrum_squared(const Spectrum& s, const Rational& threshold_sq) {
  if (threshold_sq <= 0) throw InvalidArgument("large spectrum threshold must be positive");
  // T^2 q >= p 2^{2m}
  const BigInt p = numerator(threshold_sq);
  const BigInt q = denominator(threshold_sq);
  const BigInt rhs = p << (2 * s.dim());
  const bool narrow = q < pow2(60) && rhs < pow2(120);
  const Wide q_w = narrow ? static_cast<Wide>(static_cast<std::uint64_t>(q)) : 0;
  Wide rhs_w = 0;
  if (narrow) {
    rhs_w = static_cast<Wide>(static_cast<std::uint64_t>(rhs >> 64)) << 64;
    rhs_w |= static_cast<Wide>(static_cast<std::uint64_t>(rhs & BigInt(~std::uint64_t{0})));
  }
  std::vector<Word> gammas;
  const auto c = s.coeffs();
  for (Word g = 0; g < c.size(); ++g) {
    const Wide t2 = static_cast<Wide>(c[g]) * c[g];
    const bool hit = narrow ? t2 * q_w >= rhs_w : to_big(t2) * q >= rhs;
    if (hit) gammas.push_back(g);
  }
  // Chebyshev with Parseval: |Γ| θ² <= α.
  const Rational alpha(BigInt(s.set_size()), pow2(s.dim()));
  FREIMAN_ENSURE(Rational(BigInt(gammas.size())) * threshold_sq <= alpha, "large spectrum exceeds the Parseval bound");
  return PointSet(s.dim(), std::move(gammas));
}

DenseSet conv4_support(const DenseSet& a, Conv4Options options) {
  if (a.empty()) throw InvalidArgument("4-fold convolution of an empty set");
  const Spectrum spectrum = fourier_indicator(a);
  // T^4 <= 2^{4m}; inverse partial sums <= 2^{5m}.
  const bool fits = 5 * a.dim() <= 125;
  if (fits && !options.force_bigint) return conv4_from<Wide>(spectrum, static_cast<Wide>(a.size()));
  if (!options.allow_bigint) throw OverflowError("4-fold convolution needs more than 128 bits");
  return conv4_from<BigInt>(spectrum, BigInt(a.size()));
}

}  // namespace freiman
