#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rpm/dynamics.hpp"
#include "rpm/kernel.hpp"
#include "rpm/paths.hpp"

namespace rpm {

struct SolveOptions {
  Caps caps;
  KernelOptions kernel;
};

// Null vector of the generator, normalised to coprime positive integers.
class StationaryState {
 public:
  StationaryState(ModelSpec spec, std::shared_ptr<const PathSpace> space, std::vector<Integer> weights);

  Model model() const { return spec_.model; }
  int L() const { return spec_.L; }
  const ModelSpec& spec() const { return spec_; }
  const PathSpace& space() const { return *space_; }
  std::shared_ptr<const PathSpace> space_ptr() const { return space_; }
  const std::vector<Integer>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

  // Throws std::out_of_range when the path is not in the state's family.
  const Integer& weight(const HeightPath& path) const;

 private:
  ModelSpec spec_;
  std::shared_ptr<const PathSpace> space_;
  std::vector<Integer> weights_;
};

StationaryState stationary_state(Model model, int L, const SolveOptions& options = {});

struct Summary {
  Integer S, m, M;
  std::size_t mult_m = 0, mult_M = 0;
};

Summary summarize(const StationaryState& state);

struct DetailedStats {
  std::map<int, Integer> S_LN;
  std::map<int, Integer> M_LN;
  // (h_0, bulk contact floor) -> sum; model B only.
  std::map<std::pair<int, int>, Integer> Sigma_LNM;
};

DetailedStats detailed_stats(const StationaryState& state);

// Sum of weights over {w}^N and its maximum; N-1 floor conventions live in
// detailed_stats, these are the raw building blocks.
Integer level_sum(const StationaryState& state, int N);
Integer level_max(const StationaryState& state, int N);

// S^(a)_{L,N} from the triple product, for 0 <= N <= ceil((L-1)/2) and the
// N = -1 extension at even L.
Integer closed_form_S_a(int L, int N);

// S^(a)_{L,N} read off the closed-form lattice at n = floor((L-1)/2) - N for
// any integers L, N. Agrees with closed_form_S_a on its domain and gives the
// natural continuation outside it.
Integer s_a(int L, int N);

// Total S^(a)_L through the lattice, valid for every L >= -1.
Integer s_a_total(int L);

// The alternative model-C normalisation in which the minimal weight equals
// S^(a)_L. `ratio` is S^(a)_L / m^(c)_L; `weights` is filled only when the
// ratio is integral.
struct RescaledState {
  Rational ratio;
  bool integral = false;
  std::vector<Integer> weights;
  Integer total;
};

RescaledState rescale_to_s_a(const StationaryState& state);

}  // namespace rpm
