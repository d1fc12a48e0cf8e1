#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rpm/paths.hpp"
#include "rpm/stationary.hpp"

namespace rpm {

struct Instance {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool pass;
  // Recorded for reference; does not count towards the overall status.
  bool informational = false;
};

struct VerificationReport {
  std::string id;
  std::vector<Model> models;
  int L_min = 0;
  int L_max = 0;
  std::vector<Instance> instances;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
};

// Stationary states computed once and shared. Safe for concurrent use.
class StateCache {
 public:
  explicit StateCache(SolveOptions options = {}) : options_(options) {}
  const StationaryState& get(Model model, int L);
  // Seeds the cache with a precomputed state, replacing any held one.
  void insert(StationaryState state);

 private:
  SolveOptions options_;
  std::mutex mutex_;
  std::map<std::pair<Model, int>, std::unique_ptr<StationaryState>> states_;
};

// Ids "1" .. "13" and "X" (the X(s) weights with the six relations that lead
// to them). L_max bounds the primary model's size; helper states at L+1 and
// L+2 are taken from the cache as needed. Throws std::invalid_argument on an
// unknown id and CapExceeded past the kernel caps.
VerificationReport verify_conjecture(const std::string& id, int L_max, StateCache& cache);
std::vector<std::string> conjecture_ids();

// Hexagon relations among kernel-derived S^(a)_{L,N}, L <= L_max, in both the
// parity-split N form and the uniform n form.
VerificationReport verify_hexagon_on_states(int L_max, StateCache& cache);

// Model A, odd L: the configurations rising and falling between heights 1
// and 2 up to the first 0 at odd k, then alternating 0, 1 to the end.
std::vector<HeightPath> odd_maximizers(int L);

}  // namespace rpm
