#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tubenum {

/// mt19937_64 with distribution code spelled out here, so that sequences are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n), n > 0, without modulo bias.
  std::uint64_t below(std::uint64_t n);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent stream for a labelled sub-task.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tubenum
