#ifndef WSMIL_RANDOM_HPP
#define WSMIL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace wsmil {

// Deterministic random source. std::mt19937_64 output is pinned by the
// standard, but the std distributions are not, so sampling is done here
// by hand to keep generated files byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; second value cached.
  double normal();

  // Uniform integer in [0, n), rejection sampled (n >= 1).
  std::uint64_t below(std::uint64_t n);

  // k distinct indices out of [0, n), sorted ascending (partial Fisher-Yates).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wsmil

#endif  // WSMIL_RANDOM_HPP
