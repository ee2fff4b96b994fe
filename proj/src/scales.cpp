/*
 * Scale schedule arithmetic and integer helpers.
 */

#include "seasq/scales.hpp"

#include <stdexcept>

namespace seasq {

bigint ipow(const bigint& base, std::uint64_t exp) {
  bigint r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

std::uint64_t bit_length(const bigint& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

std::uint64_t ceil_log2(const bigint& x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
  const std::uint64_t b = bit_length(x);
  // x <= 2^(b-1) exactly when x is a power of two.
  bigint p = bigint(1) << (b - 1);
  return p == x ? b - 1 : b;
}

bigint icbrt(const bigint& x) {
  if (x < 0) throw std::invalid_argument("icbrt: negative input");
  if (x == 0) return 0;
  // Binary search on the bit length.
  bigint lo = 1, hi = bigint(1) << (bit_length(x) / 3 + 1);
  while (lo < hi) {
    bigint mid = (lo + hi + 1) / 2;
    if (mid * mid * mid <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bigint ceil_pow_2_3(const bigint& x) {
  if (x < 0) throw std::invalid_argument("ceil_pow_2_3: negative input");
  if (x == 0) return 0;
  const bigint r = icbrt(x * x);  // floor((x^2)^(1/3))
  return r * r * r == x * x ? r : r + 1;
}

bigint zoom_factor(const ScaleSchedule& sched, int k) {
  if (k < 0) throw std::invalid_argument("zoom_factor: negative level");
  if (sched.toy()) {
    const std::size_t idx =
        std::min<std::size_t>(k, sched.factors.size() - 1);
    const std::int64_t f = sched.factors[idx];
    if (f < 2) throw std::invalid_argument("toy schedule factor must be >= 2");
    return f;
  }
  // Production: N_k = 2^(2^(2^k)).  N_5's exponent is 2^32; refuse.
  if (k > 4)
    throw std::overflow_error(
        "production zoom factor not representable beyond level 4");
  const std::uint64_t e = std::uint64_t(1) << (std::uint64_t(1) << k);
  return bigint(1) << e;
}

bigint level_size(const ScaleSchedule& sched, int i) {
  if (i < 0) throw std::invalid_argument("level_size: negative level");
  bigint L = 1;
  for (int k = 0; k < i; ++k) L *= zoom_factor(sched, k);
  return L;
}

ScaleParams scales(int i0, int i, const ScaleSchedule& sched) {
  if (i0 < 0 || i < i0)
    throw std::invalid_argument("scales: need 0 <= i0 <= i");
  ScaleParams p;
  p.i0 = i0;
  p.i = i;
  p.N_i = zoom_factor(sched, i);
  p.L_i = 1;
  for (int k = 0; k < i; ++k) p.L_i *= zoom_factor(sched, k);
  p.M_i = 1;
  for (int k = i0; k < i; ++k) p.M_i *= zoom_factor(sched, k);
  return p;
}

}  // namespace seasq
