#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hccourant/io.hpp"

namespace hcc {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t identity_draws = 50;
  std::size_t axiom_draws = 100;
  std::size_t poisson_tables = 200;
  std::size_t mu_tables = 200;
};

/// Generator for one named case: the stream depends only on (seed, case id).
std::mt19937_64 case_rng(std::uint64_t seed, const std::string& case_id);

/// Every verification family over the bundled corpus. The report holds no
/// timings, so equal seeds give byte-identical dumps.
Json run_suite(const SuiteOptions& options);

}  // namespace hcc
