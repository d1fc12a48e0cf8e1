#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rpm {

enum class Family { Dyck, Ballot, AnchoredCross };
enum class Model { A, B, C };
enum class Side { Left, Right };

using Height = std::int16_t;

Family family_of(Model model);
Model model_of(Family family);

std::string_view to_string(Family family);
std::string_view to_string(Model model);
std::string_view to_string(Side side);
std::optional<Family> parse_family(std::string_view text);
std::optional<Model> parse_model(std::string_view text);

bool satisfies(Family family, std::span<const Height> heights);

// An interface configuration h_0..h_L together with the family it belongs to.
// Construction validates the family invariants.
class HeightPath {
 public:
  HeightPath(Family family, std::vector<Height> heights);

  Family family() const { return family_; }
  int size() const { return static_cast<int>(h_.size()) - 1; }
  const std::vector<Height>& heights() const { return h_; }
  Height operator[](int i) const { return h_[static_cast<std::size_t>(i)]; }

  // Bit L-1-i is set when step i goes down, so numeric order is the
  // lexicographic order of step words with up < down.
  std::uint64_t step_word() const;

  HeightPath with_family(Family family) const { return HeightPath(family, h_); }
  Height min_height() const;
  std::string str() const;

  friend bool operator==(const HeightPath&, const HeightPath&) = default;

 private:
  Family family_;
  std::vector<Height> h_;
};

std::vector<HeightPath> enumerate_family(Family family, int L);

// Enumerated family with an index lookup by step word.
class PathSpace {
 public:
  PathSpace(Family family, int L);

  Family family() const { return family_; }
  int L() const { return L_; }
  std::size_t size() const { return paths_.size(); }
  const HeightPath& operator[](std::size_t i) const { return paths_[i]; }
  const std::vector<HeightPath>& paths() const { return paths_; }
  auto begin() const { return paths_.begin(); }
  auto end() const { return paths_.end(); }

  std::optional<std::size_t> index_of(const HeightPath& path) const;
  std::optional<std::size_t> index_of_heights(std::span<const Height> heights) const;

 private:
  Family family_;
  int L_;
  std::vector<HeightPath> paths_;
  std::vector<std::int32_t> by_word_;
};

struct Contact {
  int position;
  int level;
  friend bool operator==(const Contact&, const Contact&) = default;
};

void require_model(const HeightPath& path, Model model);
std::vector<Contact> contacts(const HeightPath& path, Model model);
int interior_min(const HeightPath& path, Model model);
// Membership in {w}^N: no p-contacts with p < N.
bool in_level_set(const HeightPath& path, Model model, int N);
int count_contacts(const HeightPath& path, Model model, int level);

namespace shape {
struct W { int L, h0, s; };
struct X { int L, s; };
struct Y { int L, s; };
struct Z { int L, s; };
struct Substrate { Model model; int L; };
struct Zigzag { Model model; int L; };
}  // namespace shape

using Shape = std::variant<shape::W, shape::X, shape::Y, shape::Z,
                           shape::Substrate, shape::Zigzag>;

HeightPath build_shape(const Shape& spec);

HeightPath reduce(const HeightPath& path, Side side);
HeightPath mirror(const HeightPath& path, Model model);

}  // namespace rpm
