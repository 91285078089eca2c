#include "tradefreq/rng.hpp"

#include <cmath>

namespace tradefreq {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double GaussianRng::uniform01() {
  // 53-bit mantissa, then flipped into (0, 1] so the log below is finite.
  const double u = static_cast<double>(gen_() >> 11) * 0x1p-53;
  return 1.0 - u;
}

double GaussianRng::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

}  // namespace tradefreq
