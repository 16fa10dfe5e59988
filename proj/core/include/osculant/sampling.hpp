#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "osculant/rational.hpp"

namespace osculant {

// Generic-point protocol shared by every sampled-mode rank computation:
// draw `samples` integer points with coordinates in [-bound, bound] from a
// deterministic generator and take the maximum rank seen.
struct SampleProtocol {
  std::uint64_t seed = 0;
  int samples = 5;
  long bound = 100;
};

// Deterministic stream of integer points. Each consumer derives its own
// stream from (seed, tag) so adding a computation never shifts another's
// samples.
class PointSampler {
 public:
  PointSampler(const SampleProtocol& proto, std::string_view tag);

  long next_int();
  // Coordinates uniform in [-bound, bound].
  std::vector<Rational> point(int k);
  // Coordinates uniform in [-bound, bound] with 0 remapped away; used where
  // a vanishing coordinate is never generic (scaling slots, ruling offsets).
  std::vector<Rational> nonzero_point(int k);

 private:
  std::mt19937_64 eng_;
  long bound_;
};

}  // namespace osculant
