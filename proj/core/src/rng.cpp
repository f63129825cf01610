#include "kinex/rng.hpp"

namespace kinex {

std::uint64_t Rng::below(std::uint64_t n) {
  __extension__ typedef unsigned __int128 u128;
  std::uint64_t x = engine_();
  u128 m = static_cast<u128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = engine_();
      m = static_cast<u128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace kinex
