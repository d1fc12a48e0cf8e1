#include "rpm/stationary.hpp"

#include <algorithm>
#include <string>

#include "rpm/hexagon.hpp"

namespace rpm {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

StationaryState::StationaryState(ModelSpec spec, std::shared_ptr<const PathSpace> space,
                                 std::vector<Integer> weights)
    : spec_(spec), space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_ || space_->size() != weights_.size()) {
    throw std::invalid_argument("weights do not match the path space");
  }
}

const Integer& StationaryState::weight(const HeightPath& path) const {
  const auto idx = space_->index_of(path);
  if (!idx || path.family() != space_->family()) {
    throw std::out_of_range("path " + path.str() + " is not in the state");
  }
  return weights_[*idx];
}

StationaryState stationary_state(Model model, int L, const SolveOptions& options) {
  const IntensityMatrix h = intensity_matrix(model, L, options.caps);
  std::vector<Integer> p = integer_kernel(h.sparse(), options.kernel);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) {
      throw std::runtime_error("stationary weight of " + h.space()[i].str() + " is not positive");
    }
  }
  return StationaryState(h.spec(), h.space_ptr(), std::move(p));
}

Summary summarize(const StationaryState& state) {
  Summary s;
  const auto& w = state.weights();
  s.S = 0;
  for (const Integer& x : w) s.S += x;
  s.m = *std::min_element(w.begin(), w.end());
  s.M = *std::max_element(w.begin(), w.end());
  s.mult_m = static_cast<std::size_t>(std::count(w.begin(), w.end(), s.m));
  s.mult_M = static_cast<std::size_t>(std::count(w.begin(), w.end(), s.M));
  return s;
}

Integer level_sum(const StationaryState& state, int N) {
  Integer s = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (in_level_set(state.space()[i], state.model(), N)) s += state.weights()[i];
  }
  return s;
}

Integer level_max(const StationaryState& state, int N) {
  Integer s = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (in_level_set(state.space()[i], state.model(), N)) s = std::max(s, state.weights()[i]);
  }
  return s;
}

DetailedStats detailed_stats(const StationaryState& state) {
  DetailedStats d;
  const Model model = state.model();
  const int L = state.L();
  // Level sets only shrink; stop once one no longer does.
  std::size_t previous = state.size() + 1;
  for (int N = 0; N <= L + 1; ++N) {
    Integer sum = 0, max = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (!in_level_set(state.space()[i], model, N)) continue;
      ++count;
      sum += state.weights()[i];
      max = std::max(max, state.weights()[i]);
    }
    if (count == 0 || count == previous) break;
    previous = count;
    d.S_LN[N] = sum;
    d.M_LN[N] = max;
  }
  if (model != Model::B) return d;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const HeightPath& p = state.space()[i];
    int floor = L + 1;
    for (const Contact& c : contacts(p, model)) {
      if (c.position > 0) floor = std::min(floor, c.level);
    }
    // A path counts towards every M up to its bulk contact floor.
    for (int M = 0; M <= std::min(floor, L); ++M) d.Sigma_LNM[{p[0], M}] += state.weights()[i];
  }
  return d;
}

Integer s_a(int L, int N) {
  const Rational v = f_closed(L, floor_div(L - 1, 2) - N);
  if (v.get_den() != 1) {
    throw std::domain_error("S_a(" + std::to_string(L) + "," + std::to_string(N) +
                            ") is not integral: " + to_string(v));
  }
  return v.get_num();
}

Integer s_a_total(int L) { return s_a(L, 0); }

Integer closed_form_S_a(int L, int N) {
  if (L < 1) throw std::invalid_argument("closed_form_S_a needs L >= 1");
  const int top = L / 2;  // ceil((L-1)/2)
  if (N > top || N < -1 || (N == -1 && L % 2 != 0)) {
    throw std::invalid_argument("closed_form_S_a: N=" + std::to_string(N) + " outside the domain for L=" +
                                std::to_string(L));
  }
  return s_a(L, N);
}

RescaledState rescale_to_s_a(const StationaryState& state) {
  if (state.model() != Model::C) throw std::invalid_argument("rescaling applies to model C");
  const Summary s = summarize(state);
  RescaledState out;
  out.ratio = Rational(s_a_total(state.L()), s.m);
  out.ratio.canonicalize();
  out.integral = out.ratio.get_den() == 1;
  out.total = 0;
  if (out.integral) {
    out.weights.reserve(state.size());
    for (const Integer& w : state.weights()) {
      out.weights.push_back(w * out.ratio.get_num());
      out.total += out.weights.back();
    }
  }
  return out;
}

}  // namespace rpm
