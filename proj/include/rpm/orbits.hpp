#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rpm/kernel.hpp"
#include "rpm/paths.hpp"
#include "rpm/stationary.hpp"

namespace rpm {

// Adds a tile column over every k <= i (left) or k >= i (right), then lowers
// the whole path by 2 if it no longer touches {0, 1}.
HeightPath covering(const HeightPath& path, int i, Side side);

// N-contacts away from the far boundary and on the near side of every
// contact of lower level. The contact model follows the path family.
std::vector<int> eligible_contacts(const HeightPath& path, int N, Side side);

struct Orbit {
  HeightPath generator;
  int level;
  Side side;
  // Sorted by canonical (step word) order.
  std::vector<HeightPath> members;
  std::size_t eligible_count;
};

class OrbitSizeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Breadth-first closure under eligible coverings. Throws OrbitSizeError when
// the result does not have 2^|eligible| members.
Orbit orbit_closure(const HeightPath& path, int N, Side side);

// Generators of the maximal orbits for N in {0, 1}: (Ballot, Left) or
// (AnchoredCross, Right). Throws std::invalid_argument otherwise.
std::vector<HeightPath> maximal_generators(Family family, int L, int N, Side side);

// Throws std::out_of_range if a member is not in the state.
Integer orbit_sum(const StationaryState& state, const Orbit& orbit);

}  // namespace rpm
