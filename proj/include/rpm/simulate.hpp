#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rpm/paths.hpp"
#include "rpm/stationary.hpp"

namespace rpm {

struct Distance {
  double tv;
  // Over states with positive empirical mass; +inf if such a state has zero
  // exact probability.
  double max_rel_err;
};

// Throws std::invalid_argument on a size mismatch.
Distance distance(const std::vector<double>& empirical, const std::vector<double>& exact);

std::vector<double> probabilities(const StationaryState& state);

struct SimOptions {
  std::uint64_t steps = 1'000'000;
  std::uint64_t seed = 42;
  // Defaults to steps / 10 when unset.
  std::int64_t burn_in = -1;
  Caps caps;
};

struct SimResult {
  Model model;
  int L;
  std::uint64_t steps;
  std::uint64_t burn_in;
  std::uint64_t seed;
  std::string rng;
  // Occupation after each recorded step, by canonical index; sums to steps.
  std::vector<std::uint64_t> counts;
  std::vector<double> exact;
  Distance distance;
  // Tiles desorbed per avalanche (total avalanches included) -> events.
  std::map<int, std::uint64_t> avalanches;
};

// Uniformised chain: each step drops a tile on a uniformly chosen site.
// Starts from the first path in canonical order.
SimResult simulate_chain(Model model, int L, const SimOptions& options = {});

}  // namespace rpm
