#include "rpm/paths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rpm {

namespace {

constexpr int kMaxEnumerableL = 24;

std::pair<int, int> contact_range(Model model, int L) {
  switch (model) {
    case Model::A: return {1, L - 1};
    case Model::B: return {0, L - 1};
    case Model::C: return {0, L};
  }
  return {0, -1};
}

bool is_contact(std::span<const Height> h, int i) {
  const int L = static_cast<int>(h.size()) - 1;
  if (i > 0 && h[i - 1] != h[i] + 1) return false;
  if (i < L && h[i + 1] != h[i] + 1) return false;
  return L > 0;
}

}  // namespace

Family family_of(Model model) {
  switch (model) {
    case Model::A: return Family::Dyck;
    case Model::B: return Family::Ballot;
    case Model::C: return Family::AnchoredCross;
  }
  throw std::invalid_argument("unknown model");
}

Model model_of(Family family) {
  switch (family) {
    case Family::Dyck: return Model::A;
    case Family::Ballot: return Model::B;
    case Family::AnchoredCross: return Model::C;
  }
  throw std::invalid_argument("unknown family");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Dyck: return "Dyck";
    case Family::Ballot: return "Ballot";
    case Family::AnchoredCross: return "AnchoredCross";
  }
  return "?";
}

std::string_view to_string(Model model) {
  switch (model) {
    case Model::A: return "A";
    case Model::B: return "B";
    case Model::C: return "C";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::optional<Family> parse_family(std::string_view text) {
  if (text == "Dyck" || text == "dyck") return Family::Dyck;
  if (text == "Ballot" || text == "ballot") return Family::Ballot;
  if (text == "AnchoredCross" || text == "anchoredcross" || text == "cross") {
    return Family::AnchoredCross;
  }
  return std::nullopt;
}

std::optional<Model> parse_model(std::string_view text) {
  if (text == "A" || text == "a") return Model::A;
  if (text == "B" || text == "b") return Model::B;
  if (text == "C" || text == "c") return Model::C;
  return std::nullopt;
}

bool satisfies(Family family, std::span<const Height> h) {
  if (h.empty()) return false;
  const std::size_t L = h.size() - 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) return false;
    if (i < L && std::abs(h[i + 1] - h[i]) != 1) return false;
  }
  switch (family) {
    case Family::Dyck:
      return h[L] == 0 && h[0] == static_cast<Height>(L % 2);
    case Family::Ballot:
      return h[L] == 0;
    case Family::AnchoredCross:
      return h[L] % 2 == 0 &&
             std::any_of(h.begin(), h.end(), [](Height x) { return x <= 1; });
  }
  return false;
}

HeightPath::HeightPath(Family family, std::vector<Height> heights)
    : family_(family), h_(std::move(heights)) {
  if (!satisfies(family_, h_)) {
    throw std::invalid_argument("heights " + str() + " are not a " +
                                std::string(to_string(family_)) + " path");
  }
}

std::uint64_t HeightPath::step_word() const {
  std::uint64_t word = 0;
  for (int i = 0; i < size(); ++i) {
    word = (word << 1) | (h_[i + 1] < h_[i] ? 1u : 0u);
  }
  return word;
}

Height HeightPath::min_height() const { return *std::min_element(h_.begin(), h_.end()); }

std::string HeightPath::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h_[i]);
  }
  return out + "]";
}

namespace {

// Starting height of the unique path of `family` with the given step word.
std::optional<int> start_height(Family family, int L, std::uint64_t word) {
  int d = 0, dmin = 0;
  for (int i = 0; i < L; ++i) {
    d += (word >> (L - 1 - i)) & 1u ? -1 : 1;
    dmin = std::min(dmin, d);
  }
  switch (family) {
    case Family::Ballot:
      if (-d + dmin < 0) return std::nullopt;
      return -d;
    case Family::Dyck:
      if (-d != L % 2 || -d + dmin < 0) return std::nullopt;
      return -d;
    case Family::AnchoredCross: {
      int h0 = -dmin;
      if ((h0 + d) % 2 != 0) ++h0;
      return h0;
    }
  }
  return std::nullopt;
}

std::vector<Height> heights_from_word(int h0, int L, std::uint64_t word) {
  std::vector<Height> h(static_cast<std::size_t>(L) + 1);
  h[0] = static_cast<Height>(h0);
  for (int i = 0; i < L; ++i) {
    h[i + 1] = static_cast<Height>(h[i] + (((word >> (L - 1 - i)) & 1u) ? -1 : 1));
  }
  return h;
}

}  // namespace

std::vector<HeightPath> enumerate_family(Family family, int L) {
  if (L < 1) throw std::invalid_argument("enumerate_family needs L >= 1");
  if (L > kMaxEnumerableL) throw std::invalid_argument("L too large to enumerate");
  std::vector<HeightPath> out;
  const std::uint64_t words = std::uint64_t{1} << L;
  for (std::uint64_t w = 0; w < words; ++w) {
    if (auto h0 = start_height(family, L, w)) {
      out.emplace_back(family, heights_from_word(*h0, L, w));
    }
  }
  return out;
}

PathSpace::PathSpace(Family family, int L)
    : family_(family), L_(L), paths_(enumerate_family(family, L)) {
  by_word_.assign(std::size_t{1} << L, -1);
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    by_word_[paths_[i].step_word()] = static_cast<std::int32_t>(i);
  }
}

std::optional<std::size_t> PathSpace::index_of(const HeightPath& path) const {
  if (path.size() != L_) return std::nullopt;
  return index_of_heights(path.heights());
}

std::optional<std::size_t> PathSpace::index_of_heights(std::span<const Height> h) const {
  if (static_cast<int>(h.size()) != L_ + 1) return std::nullopt;
  std::uint64_t word = 0;
  for (int i = 0; i < L_; ++i) word = (word << 1) | (h[i + 1] < h[i] ? 1u : 0u);
  const std::int32_t idx = by_word_[word];
  if (idx < 0 || paths_[idx].heights()[0] != h[0]) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

void require_model(const HeightPath& path, Model model) {
  if (path.family() != family_of(model)) {
    throw std::invalid_argument("model " + std::string(to_string(model)) + " needs " +
                                std::string(to_string(family_of(model))) + " paths, got " +
                                std::string(to_string(path.family())));
  }
}

std::vector<Contact> contacts(const HeightPath& path, Model model) {
  require_model(path, model);
  const auto [lo, hi] = contact_range(model, path.size());
  std::vector<Contact> out;
  for (int i = lo; i <= hi; ++i) {
    if (is_contact(path.heights(), i)) out.push_back({i, path[i]});
  }
  return out;
}

int interior_min(const HeightPath& path, Model model) {
  require_model(path, model);
  const auto [lo, hi] = contact_range(model, path.size());
  int m = std::numeric_limits<int>::max();
  for (int i = lo; i <= hi; ++i) m = std::min<int>(m, path[i]);
  return m;
}

bool in_level_set(const HeightPath& path, Model model, int N) {
  for (const Contact& c : contacts(path, model)) {
    if (c.level < N) return false;
  }
  return true;
}

int count_contacts(const HeightPath& path, Model model, int level) {
  int n = 0;
  for (const Contact& c : contacts(path, model)) n += c.level == level;
  return n;
}

namespace {

void ascend_to(std::vector<Height>& h, int top) {
  while (h.back() < top) h.push_back(static_cast<Height>(h.back() + 1));
}

void descend_to(std::vector<Height>& h, int bottom) {
  while (h.back() > bottom) h.push_back(static_cast<Height>(h.back() - 1));
}

void zigzag(std::vector<Height>& h, int s, int k) {
  for (int j = 0; j < k; ++j) {
    h.push_back(static_cast<Height>(s));
    h.push_back(static_cast<Height>(s + 1));
  }
}

HeightPath finish(Family family, std::vector<Height> h, int L) {
  if (static_cast<int>(h.size()) != L + 1) throw std::logic_error("shape length mismatch");
  return HeightPath(family, std::move(h));
}

struct ShapeBuilder {
  HeightPath operator()(const shape::W& w) const {
    if (w.L < 1 || w.h0 < 0 || (w.L + w.h0) % 2 != 0) {
      throw std::invalid_argument("W needs h0 = L (mod 2)");
    }
    const int k = (w.L + w.h0) / 2 - w.s - 1;
    if (w.s < std::max(0, w.h0 - 1) || k < 0) throw std::invalid_argument("W: s out of range");
    std::vector<Height> h{static_cast<Height>(w.h0)};
    ascend_to(h, w.s + 1);
    zigzag(h, w.s, k);
    descend_to(h, 0);
    return finish(Family::Ballot, std::move(h), w.L);
  }
  HeightPath operator()(const shape::X& x) const {
    if (x.L % 2 != 0 || x.s < 1 || 2 * x.s > x.L - 2) {
      throw std::invalid_argument("X needs L even and 1 <= s <= (L-2)/2");
    }
    std::vector<Height> h{2, 1};
    ascend_to(h, x.s + 1);
    zigzag(h, x.s, (x.L - 2 - 2 * x.s) / 2);
    descend_to(h, 1);
    h.push_back(2);
    return finish(Family::AnchoredCross, std::move(h), x.L);
  }
  HeightPath operator()(const shape::Y& y) const {
    if (y.L % 2 != 0 || y.s < 1 || 2 * y.s > y.L - 2) {
      throw std::invalid_argument("Y needs L even and 1 <= s <= (L-2)/2");
    }
    std::vector<Height> h{2, 1};
    ascend_to(h, y.s + 1);
    zigzag(h, y.s, (y.L - 2 - 2 * y.s) / 2);
    descend_to(h, 0);
    return finish(Family::Ballot, std::move(h), y.L);
  }
  HeightPath operator()(const shape::Z& z) const {
    if (z.L % 2 != 1 || z.s < 1 || 2 * z.s > z.L - 1) {
      throw std::invalid_argument("Z needs L odd and 1 <= s <= (L-1)/2");
    }
    std::vector<Height> h{3, 2};
    ascend_to(h, z.s + 1);
    zigzag(h, z.s, (z.L - 1 - 2 * z.s) / 2);
    descend_to(h, 0);
    return finish(Family::Ballot, std::move(h), z.L);
  }
  HeightPath operator()(const shape::Substrate& s) const { return minimal(s.model, s.L); }
  HeightPath operator()(const shape::Zigzag& s) const { return minimal(s.model, s.L); }

  // Pointwise-minimal path of the family: 0,1,0,... ending at 0.
  static HeightPath minimal(Model model, int L) {
    if (L < 1) throw std::invalid_argument("L must be positive");
    std::vector<Height> h(static_cast<std::size_t>(L) + 1);
    for (int i = 0; i <= L; ++i) h[i] = static_cast<Height>((i + L) % 2);
    return HeightPath(family_of(model), std::move(h));
  }
};

}  // namespace

HeightPath build_shape(const Shape& spec) { return std::visit(ShapeBuilder{}, spec); }

HeightPath reduce(const HeightPath& path, Side side) {
  const auto& h = path.heights();
  if (path.size() < 2) throw std::invalid_argument("reduce needs L+1 >= 2");
  if (side == Side::Left) {
    return HeightPath(Family::Ballot, std::vector<Height>(h.begin() + 1, h.end()));
  }
  std::vector<Height> out(h.begin(), h.end() - 1);
  const Height shift = *std::min_element(out.begin(), out.end()) == 0 ? 1 : -1;
  for (Height& x : out) x = static_cast<Height>(x + shift);
  return HeightPath(Family::AnchoredCross, std::move(out));
}

HeightPath mirror(const HeightPath& path, Model model) {
  if (model == Model::B) throw std::invalid_argument("mirror is defined for models A and C");
  require_model(path, model);
  const int L = path.size();
  const auto& h = path.heights();
  std::vector<Height> out(h.rbegin(), h.rend());
  if (L % 2 == 1) {
    if (model == Model::A) {
      int i0 = L;
      for (const Contact& c : contacts(path, model)) {
        if (c.level == 0) {
          i0 = c.position;
          break;
        }
      }
      for (int i = 0; i <= L; ++i) out[i] = static_cast<Height>(out[i] + (i <= L - i0 ? 1 : -1));
    } else {
      const Height shift = path.min_height() == 0 ? 1 : -1;
      for (Height& x : out) x = static_cast<Height>(x + shift);
    }
  }
  return HeightPath(path.family(), std::move(out));
}

}  // namespace rpm
