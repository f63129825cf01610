#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace kinex {

/// Seeded generator used by every simulation in the library.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// The standard distributions are implementation-defined, so the variate
/// conversions below are done by hand to keep runs bit-reproducible across
/// standard libraries.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on [0, n). Unbiased (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t n);

 private:
  engine_type engine_;
};

}  // namespace kinex
