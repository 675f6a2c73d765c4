#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sandpile/multigraph.hpp"

namespace sandpile {

/// Bounds and reproducibility knobs for the cross-verification sweep.
struct VerifyOptions {
  std::size_t n_max = 8;          ///< longest multiplicity vector
  unsigned long mult_max = 6;     ///< largest entry
  std::size_t samples = 500;      ///< seeded random vectors on top of the
                                  ///< exhaustive small corpus
  std::uint64_t seed = 0;
  std::size_t enum_guard = kEnumerationGuard;  ///< enumeration-oracle ceiling
  bool inject_fault = false;  ///< deliberately corrupt one check (self-test)
};

struct VerifyFailure {
  std::string check;     ///< which identity failed
  std::string input;     ///< offending instance, printable form
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::size_t instances_checked = 0;
  std::size_t checks_run = 0;
  std::vector<VerifyFailure> failures;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Every multiplicity vector with length n_min..n_max and entries in
/// 1..mult_max, in lexicographic order.
std::vector<MultiplicityVector> exhaustive_vectors(std::size_t n_min,
                                                   std::size_t n_max,
                                                   unsigned long mult_max);

/// `count` seeded pseudo-random vectors with lengths in 2..n_max and
/// entries in 1..mult_max.  The same seed always returns the same list.
std::vector<MultiplicityVector> random_vectors(std::size_t count,
                                               std::size_t n_max,
                                               unsigned long mult_max,
                                               std::uint64_t seed);

/// Runs every cross-check over the exhaustive corpus (lengths 3..4,
/// entries up to 4, clipped by the requested bounds) plus the seeded
/// random corpus: closed form vs SNF, order vs Kirchhoff vs enumeration,
/// permutation invariance, gcd-chain divisibility, m_t = g_t on small
/// instances, minor selection, sink independence, banana duality, and
/// pairing axioms.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace sandpile
