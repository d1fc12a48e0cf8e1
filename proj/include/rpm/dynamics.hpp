#pragma once

#include <memory>
#include <stdexcept>
#include <utility>

#include "rpm/kernel.hpp"
#include "rpm/paths.hpp"

namespace rpm {

// Boundary couplings (c, cbar) of the generator; the bulk sits at the
// stochastic point where every rate is 1.
struct ModelSpec {
  Model model;
  int L;
  int c;
  int cbar;
  static ModelSpec of(Model model, int L);
};

// Admissible drop sites [first, last] for the model.
std::pair<int, int> site_range(Model model, int L);

enum class EventKind { Absorb, Reflect, Avalanche, TotalAvalanche };
std::string_view to_string(EventKind kind);

struct DropEvent {
  EventKind kind;
  int site;
  int desorbed;
  int terminus;  // avalanche end point k, or the site itself
};

struct DropResult {
  HeightPath path;
  DropEvent event;
};

DropResult drop_tile(const HeightPath& path, int site, Model model);

// Unchecked in-place version for hot loops. `h` must be a valid path of the
// model's family and `site` admissible.
DropEvent drop_tile_inplace(std::vector<Height>& h, int site);

struct Caps {
  int ab = 14;
  int c = 12;
  int limit(Model model) const { return model == Model::C ? c : ab; }
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_cap(Model model, int L, const Caps& caps);

class IntensityMatrix {
 public:
  IntensityMatrix(ModelSpec spec, std::shared_ptr<const PathSpace> space, SparseMatrix matrix)
      : spec_(spec), space_(std::move(space)), matrix_(std::move(matrix)) {}

  const ModelSpec& spec() const { return spec_; }
  std::size_t dimension() const { return matrix_.n; }
  const PathSpace& space() const { return *space_; }
  std::shared_ptr<const PathSpace> space_ptr() const { return space_; }
  const SparseMatrix& sparse() const { return matrix_; }
  long long at(std::size_t row, std::size_t col) const;

 private:
  ModelSpec spec_;
  std::shared_ptr<const PathSpace> space_;
  SparseMatrix matrix_;
};

IntensityMatrix intensity_matrix(Model model, int L, const Caps& caps = {});

}  // namespace rpm
