#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sandpile/verify.hpp"

using namespace sandpile;

TEST_CASE("exhaustive_vectors") {
  // 2^3 length-3 vectors over entries {1, 2}.
  CHECK(exhaustive_vectors(3, 3, 2).size() == 8);

  // Lengths 2..4 over entries 1..4: 16 + 64 + 256.
  const auto grid = exhaustive_vectors(2, 4, 4);
  CHECK(grid.size() == 336);

  // Lexicographic, no duplicates, bounds respected.
  CHECK(grid.front() == MultiplicityVector{1, 1});
  CHECK(grid[15] == MultiplicityVector{4, 4});
  CHECK(grid[16] == MultiplicityVector{1, 1, 1});
  CHECK(grid.back() == MultiplicityVector{4, 4, 4, 4});
  for (const MultiplicityVector& v : grid) {
    for (const mpz_class& e : v.entries()) {
      CHECK(e >= 1);
      CHECK(e <= 4);
    }
  }
}

TEST_CASE("random_vectors: deterministic and in bounds") {
  const auto a = random_vectors(50, 8, 6, 12345);
  const auto b = random_vectors(50, 8, 6, 12345);
  CHECK(a == b);
  CHECK(a.size() == 50);
  for (const MultiplicityVector& v : a) {
    CHECK(v.size() >= 2);
    CHECK(v.size() <= 8);
    for (const mpz_class& e : v.entries()) {
      CHECK(e >= 1);
      CHECK(e <= 6);
    }
  }
  CHECK(random_vectors(50, 8, 6, 99) != a);  // different seed, different list
}

TEST_CASE("run_verification: small healthy sweep") {
  VerifyOptions opt;
  opt.n_max = 5;
  opt.mult_max = 3;
  opt.samples = 40;
  opt.seed = 7;
  const VerifyReport report = run_verification(opt);
  CHECK(report.ok());
  CHECK(report.failures.empty());
  // Exhaustive corpus (lengths 3..4, entries 1..3) plus 40 samples.
  CHECK(report.instances_checked == 27 + 81 + 40);
  CHECK(report.checks_run > report.instances_checked);
  CHECK(report.elapsed_seconds >= 0.0);
}

TEST_CASE("run_verification: identical options, identical report") {
  VerifyOptions opt;
  opt.n_max = 4;
  opt.mult_max = 3;
  opt.samples = 10;
  opt.seed = 3;
  const VerifyReport a = run_verification(opt);
  const VerifyReport b = run_verification(opt);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.checks_run == b.checks_run);
  CHECK(a.ok());
  CHECK(b.ok());
}

TEST_CASE("run_verification: the fault injector is caught") {
  VerifyOptions opt;
  opt.n_max = 3;
  opt.mult_max = 2;
  opt.samples = 0;
  opt.inject_fault = true;
  const VerifyReport report = run_verification(opt);
  REQUIRE(!report.ok());
  REQUIRE(report.failures.size() >= 1);
  const VerifyFailure& f = report.failures.front();
  CHECK(!f.check.empty());
  CHECK(!f.input.empty());
  CHECK(!f.expected.empty());
  CHECK(!f.actual.empty());
  CHECK(f.expected != f.actual);
}
