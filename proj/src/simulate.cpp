#include "rpm/simulate.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace rpm {

Distance distance(const std::vector<double>& empirical, const std::vector<double>& exact) {
  if (empirical.size() != exact.size()) throw std::invalid_argument("distributions differ in size");
  Distance d{0.0, 0.0};
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double diff = std::abs(empirical[i] - exact[i]);
    d.tv += diff;
    if (empirical[i] > 0) {
      d.max_rel_err = std::max(d.max_rel_err, exact[i] > 0 ? diff / exact[i] : std::numeric_limits<double>::infinity());
    }
  }
  d.tv /= 2;
  return d;
}

std::vector<double> probabilities(const StationaryState& state) {
  const Integer S = summarize(state).S;
  std::vector<double> p;
  p.reserve(state.size());
  for (const Integer& w : state.weights()) p.push_back(Rational(w, S).get_d());
  return p;
}

SimResult simulate_chain(Model model, int L, const SimOptions& options) {
  if (options.steps < 1) throw std::invalid_argument("simulate_chain needs steps >= 1");
  const StationaryState state = stationary_state(model, L, {options.caps, {}});
  const PathSpace& space = state.space();
  const auto [first, last] = site_range(model, L);
  const int sites = last - first + 1;

  // Transition table: next state and event for every (state, site).
  std::vector<std::uint32_t> next(space.size() * static_cast<std::size_t>(sites));
  std::vector<std::int32_t> desorbed(next.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (int j = 0; j < sites; ++j) {
      const DropResult r = drop_tile(space[s], first + j, model);
      const std::size_t k = s * static_cast<std::size_t>(sites) + static_cast<std::size_t>(j);
      next[k] = static_cast<std::uint32_t>(*space.index_of(r.path));
      const bool avalanche = r.event.kind == EventKind::Avalanche || r.event.kind == EventKind::TotalAvalanche;
      desorbed[k] = avalanche ? r.event.desorbed : -1;
    }
  }

  SimResult out;
  out.model = model;
  out.L = L;
  out.steps = options.steps;
  out.burn_in = options.burn_in < 0 ? options.steps / 10 : static_cast<std::uint64_t>(options.burn_in);
  out.seed = options.seed;
  out.rng = "mt19937_64";
  out.counts.assign(space.size(), 0);
  out.exact = probabilities(state);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, sites - 1);
  std::size_t cur = 0;
  for (std::uint64_t t = 0; t < out.burn_in + out.steps; ++t) {
    const std::size_t k = cur * static_cast<std::size_t>(sites) + static_cast<std::size_t>(pick(rng));
    cur = next[k];
    if (t < out.burn_in) continue;
    ++out.counts[cur];
    if (desorbed[k] >= 0) ++out.avalanches[desorbed[k]];
  }

  std::vector<double> emp(space.size());
  for (std::size_t i = 0; i < emp.size(); ++i) {
    emp[i] = static_cast<double>(out.counts[i]) / static_cast<double>(out.steps);
  }
  out.distance = distance(emp, out.exact);
  return out;
}

}  // namespace rpm
