#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "cevia/geometry.hpp"
#include "cevia/quadratic_surd.hpp"

namespace cevia {

/// Seeded source of small-height rationals and of the sample objects the
/// property checks run on.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

  /// n/d with n uniform in [-bound, bound] and d uniform in [-bound, bound] \ {0}.
  Rational rational(long bound = 20);
  /// Uniform over rationals with denominator in [1, 20] inside [lo, hi].
  Rational rational_in(long lo, long hi);
  Triple triple(long bound = 20);
  /// A point with every degeneracy flag clear (resampled until it is).
  BaryPoint generic_point();
  /// a in [-20, 20] \ {0, -1, -9}.
  Rational elliptic_parameter();
  /// A real point of E_{-3} whose x-coordinate is rational and whose
  /// y-coordinate lies in a real quadratic field.
  std::array<QuadraticSurd, 3> real_point_minus3();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cevia
