#pragma once

// Randomized verification harness: runs the exact identities of the cevian
// constructions and of the curve family over seeded samples and tallies the
// outcome per identity.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cevia/cevian.hpp"
#include "cevia/curve.hpp"

namespace cevia {

struct InvariantTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;  ///< sample that first broke the identity
};

struct VerifyOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  /// Perturbs one entry of M before checking; the harness must then fail.
  bool inject_fault = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<InvariantTally> tallies;  ///< sorted by name

  bool ok() const;
};

VerifyReport run_verification(const VerifyOptions& options);

/// Independent per-sample sampler seed, so sample i is reproducible alone.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

}  // namespace cevia
