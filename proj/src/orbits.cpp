#include "rpm/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace rpm {

namespace {

bool touches_floor(const std::vector<Height>& h) {
  return std::any_of(h.begin(), h.end(), [](Height x) { return x == 0 || x == 1; });
}

}  // namespace

HeightPath covering(const HeightPath& path, int i, Side side) {
  const Model model = model_of(path.family());
  const auto cs = contacts(path, model);
  if (std::none_of(cs.begin(), cs.end(), [i](const Contact& c) { return c.position == i; })) {
    throw std::invalid_argument("covering site " + std::to_string(i) + " is not a contact of " + path.str());
  }
  std::vector<Height> h = path.heights();
  for (int k = 0; k <= path.size(); ++k) {
    if (side == Side::Left ? k <= i : k >= i) h[static_cast<std::size_t>(k)] += 2;
  }
  if (!touches_floor(h)) {
    for (Height& x : h) x -= 2;
  }
  return HeightPath(path.family(), std::move(h));
}

std::vector<int> eligible_contacts(const HeightPath& path, int N, Side side) {
  const auto cs = contacts(path, model_of(path.family()));
  const int L = path.size();
  int lo = L + 1, hi = -1;  // extent of lower-level contacts
  for (const Contact& c : cs) {
    if (c.level < N) {
      lo = std::min(lo, c.position);
      hi = std::max(hi, c.position);
    }
  }
  std::vector<int> out;
  for (const Contact& c : cs) {
    if (c.level != N) continue;
    if (side == Side::Left && c.position != L && c.position < lo) out.push_back(c.position);
    if (side == Side::Right && c.position != 0 && c.position > hi) out.push_back(c.position);
  }
  return out;
}

Orbit orbit_closure(const HeightPath& path, int N, Side side) {
  auto less = [](const HeightPath& a, const HeightPath& b) { return a.step_word() < b.step_word() ||
                                                                   (a.step_word() == b.step_word() && a[0] < b[0]); };
  std::set<HeightPath, decltype(less)> seen(less);
  std::deque<HeightPath> queue{path};
  seen.insert(path);
  while (!queue.empty()) {
    const HeightPath w = std::move(queue.front());
    queue.pop_front();
    for (int i : eligible_contacts(w, N, side)) {
      HeightPath next = covering(w, i, side);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  Orbit orbit{path, N, side, {seen.begin(), seen.end()}, eligible_contacts(path, N, side).size()};
  if (orbit.members.size() != (std::size_t{1} << orbit.eligible_count)) {
    throw OrbitSizeError("orbit of " + path.str() + " at level " + std::to_string(N) + " has " +
                         std::to_string(orbit.members.size()) + " members, expected 2^" +
                         std::to_string(orbit.eligible_count));
  }
  return orbit;
}

std::vector<HeightPath> maximal_generators(Family family, int L, int N, Side side) {
  if (N != 0 && N != 1) throw std::invalid_argument("maximal orbits are defined for N = 0, 1");
  std::vector<HeightPath> out;
  if (family == Family::Ballot && side == Side::Left) {
    for (const HeightPath& p : enumerate_family(family, L)) {
      const int h0 = p[0];
      const bool keep = N == 0 ? h0 == L % 2 : (L % 2 == 0 ? (h0 == 0 || h0 == 2) : h0 == 1);
      if (keep) out.push_back(p);
    }
    return out;
  }
  if (family == Family::AnchoredCross && side == Side::Right) {
    for (const HeightPath& p : enumerate_family(family, L)) {
      const int hL = p[L];
      const bool keep = hL == 0 || (N == 1 && hL == 2 && p.min_height() == 1);
      if (keep) out.push_back(p);
    }
    return out;
  }
  throw std::invalid_argument("maximal orbits need (Ballot, left) or (AnchoredCross, right)");
}

Integer orbit_sum(const StationaryState& state, const Orbit& orbit) {
  Integer s = 0;
  for (const HeightPath& p : orbit.members) s += state.weight(p);
  return s;
}

}  // namespace rpm
