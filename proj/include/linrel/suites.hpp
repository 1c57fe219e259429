#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrel/io.hpp"
#include "linrel/random.hpp"

namespace linrel {

// Engine for instance `index` of a run with `seed`; instances are independent
// of each other and of evaluation order.
Rng instance_rng(std::uint64_t seed, std::size_t index);

struct SuiteFailure {
  std::size_t index = 0;
  std::string message;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;  // instances outside the suite's hypothesis
  std::vector<SuiteFailure> failures;  // sorted by index
  bool ok() const { return failures.empty(); }
};

// oracle, theta, functor, torsion, extension, split, criteria, reduction,
// splitting, covering.
const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count);
Json to_json(const SuiteResult& r);

// Seeded relation instance as a relation file.
Json random_instance_json(std::uint64_t seed);

}  // namespace linrel
