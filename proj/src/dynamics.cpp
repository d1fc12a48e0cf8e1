#include "rpm/dynamics.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rpm {

ModelSpec ModelSpec::of(Model model, int L) {
  switch (model) {
    case Model::A: return {model, L, 0, 0};
    case Model::B: return {model, L, 1, 0};
    case Model::C: return {model, L, 1, 1};
  }
  throw std::invalid_argument("unknown model");
}

std::pair<int, int> site_range(Model model, int L) {
  switch (model) {
    case Model::A: return {1, L - 1};
    case Model::B: return {0, L - 1};
    case Model::C: return {0, L};
  }
  throw std::invalid_argument("unknown model");
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Absorb: return "absorb";
    case EventKind::Reflect: return "reflect";
    case EventKind::Avalanche: return "avalanche";
    case EventKind::TotalAvalanche: return "total_avalanche";
  }
  return "?";
}

DropEvent drop_tile_inplace(std::vector<Height>& h, int i) {
  const int L = static_cast<int>(h.size()) - 1;
  const bool has_left = i > 0, has_right = i < L;
  const bool below_left = !has_left || h[i] < h[i - 1];
  const bool below_right = !has_right || h[i] < h[i + 1];
  if (below_left && below_right) {
    h[i] = static_cast<Height>(h[i] + 2);
    if (std::none_of(h.begin(), h.end(), [](Height x) { return x <= 1; })) {
      for (Height& x : h) x = static_cast<Height>(x - 2);
      return {EventKind::TotalAvalanche, i, L, i};
    }
    return {EventKind::Absorb, i, 0, i};
  }
  // A boundary site has one neighbour, so it is either a minimum or a maximum.
  if ((!below_left && !below_right) || !has_left || !has_right) return {EventKind::Reflect, i, 0, i};
  // Slope: peel towards the higher neighbour until the height comes back
  // down to h_i or the scan leaves the system.
  const int d = below_right ? 1 : -1;
  int k = i + d;
  while (k >= 0 && k <= L && h[k] > h[i]) k += d;
  for (int j = std::min(i, k) + 1; j < std::max(i, k); ++j) h[j] = static_cast<Height>(h[j] - 2);
  return {EventKind::Avalanche, i, std::abs(i - k) - 1, k};
}

DropResult drop_tile(const HeightPath& path, int site, Model model) {
  require_model(path, model);
  const auto [lo, hi] = site_range(model, path.size());
  if (site < lo || site > hi) {
    throw std::out_of_range("site " + std::to_string(site) + " outside [" + std::to_string(lo) +
                            "," + std::to_string(hi) + "] for model " +
                            std::string(to_string(model)));
  }
  std::vector<Height> h = path.heights();
  const DropEvent ev = drop_tile_inplace(h, site);
  return {HeightPath(path.family(), std::move(h)), ev};
}

void check_cap(Model model, int L, const Caps& caps) {
  if (L < 1) throw std::invalid_argument("L must be positive");
  if (L > caps.limit(model)) {
    throw CapExceeded("L=" + std::to_string(L) + " exceeds the cap " +
                      std::to_string(caps.limit(model)) + " for model " +
                      std::string(to_string(model)));
  }
}

long long IntensityMatrix::at(std::size_t row, std::size_t col) const {
  long long v = 0;
  for (const MatrixEntry& e : matrix_.entries) {
    if (e.row == row && e.col == col) v += e.value;
  }
  return v;
}

IntensityMatrix intensity_matrix(Model model, int L, const Caps& caps) {
  check_cap(model, L, caps);
  auto space = std::make_shared<const PathSpace>(family_of(model), L);
  const auto [lo, hi] = site_range(model, L);
  SparseMatrix m;
  m.n = space->size();
  std::vector<Height> h;
  for (std::size_t col = 0; col < space->size(); ++col) {
    std::map<std::uint32_t, std::int32_t> column;
    for (int i = lo; i <= hi; ++i) {
      h = (*space)[col].heights();
      drop_tile_inplace(h, i);
      const auto row = space->index_of_heights(h);
      if (!row) {
        throw std::logic_error("drop at site " + std::to_string(i) + " left the family from " +
                               (*space)[col].str());
      }
      if (*row == col) continue;
      column[static_cast<std::uint32_t>(*row)] -= 1;
      column[static_cast<std::uint32_t>(col)] += 1;
    }
    for (const auto& [row, value] : column) {
      m.entries.push_back({row, static_cast<std::uint32_t>(col), value});
    }
  }
  return IntensityMatrix(ModelSpec::of(model, L), std::move(space), std::move(m));
}

}  // namespace rpm
