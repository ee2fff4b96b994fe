#pragma once
/*
 * Macrotile scale arithmetic.
 *
 * The hierarchy uses a schedule of zoom factors N_0, N_1, ...: a level-(i+1)
 * macrotile is an N_i x N_i block of level-i macrotiles.  Derived quantities:
 *
 *   L_i = prod_{k <  i} N_k   (side of a level-i macrotile in pixels)
 *   M_i = prod_{i0 <= k < i} N_k   (side in level-i0 tiles)
 *
 * The production schedule is N_k = 2^(2^(2^k)); its values explode quickly
 * (N_4 already has 65536 bits), so everything here is arbitrary precision.
 * Toy schedules with small hand-picked factors make desk-scale assemblies
 * checkable by hand.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace seasq {

using bigint = boost::multiprecision::cpp_int;

struct ScaleSchedule {
  // Empty: production schedule N_k = 2^(2^(2^k)).  Non-empty: toy schedule,
  // N_k = factors[min(k, factors.size()-1)]; every factor must be >= 2.
  std::vector<std::int64_t> factors;

  bool toy() const { return !factors.empty(); }
  static ScaleSchedule production() { return {}; }
  static ScaleSchedule toy_of(std::vector<std::int64_t> f) { return {std::move(f)}; }
};

struct ScaleParams {
  int i0 = 0;
  int i = 0;
  bigint N_i;  // zoom factor at level i
  bigint L_i;  // level-i side in pixels
  bigint M_i;  // level-i side in level-i0 tiles
};

// Zoom factor N_k.  For the production schedule k must be <= 4: N_5 has
// 2^32 bits and is not representable.
bigint zoom_factor(const ScaleSchedule& sched, int k);

// L_i = prod_{k < i} N_k, the pixel side of a level-i macrotile.
bigint level_size(const ScaleSchedule& sched, int i);

// Full parameter set; requires 0 <= i0 <= i (and i <= 4 on production).
ScaleParams scales(int i0, int i, const ScaleSchedule& sched);

// Integer helpers shared by the budget computations.
bigint ipow(const bigint& base, std::uint64_t exp);
bigint icbrt(const bigint& x);        // floor cube root
bigint ceil_pow_2_3(const bigint& x); // ceil(x^(2/3))
std::uint64_t bit_length(const bigint& x);  // bits of |x|; 0 -> 0
std::uint64_t ceil_log2(const bigint& x);   // smallest b with 2^b >= x; x>=1

}  // namespace seasq
