#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpm/kernel.hpp"

namespace rpm {

// Closed-form solution f_{m,n} of the hexagon relation on the whole lattice.
// Negative factorial arguments are read as Pochhammer ratios. Throws
// std::domain_error if a ratio would divide by zero.
Rational f_closed(long m, long n);

// Values fixed along the lines n = 0, -1, m = 0, -1 and the four zero lines;
// nullopt elsewhere.
std::optional<Rational> special_line_value(long m, long n);

// Exact a a' + b b' = c c'.
bool hexagon_holds(const Rational& a, const Rational& a2, const Rational& b, const Rational& b2,
                   const Rational& c, const Rational& c2);

// Residual of the relation centred at (m, n); zero when it holds.
Rational hexagon_residual(long m, long n);

struct Window {
  int m_lo, m_hi, n_lo, n_hi;
  bool contains(int m, int n) const { return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi; }
};

class HexLattice {
 public:
  explicit HexLattice(Window window);

  const Window& window() const { return window_; }
  bool known(int m, int n) const;
  const Rational& at(int m, int n) const;
  void set(int m, int n, Rational value);
  std::size_t known_count() const;
  // Grid with one row per n (descending) and one column per m, values as
  // "p/q"; unknown cells are empty.
  std::string to_csv() const;

 private:
  std::size_t offset(int m, int n) const;
  Window window_;
  std::vector<std::optional<Rational>> cells_;
};

enum class Seed {
  // f_{m>=0,0} = f_{m>=0,-1} = 1 and the zero line m = 2n-1; fills n > 0,
  // m >= 2n row by row.
  Boundary,
  // The special lines n = 0, -1, m = 0, -1 and the four zero lines; fills
  // every cell reachable through a hexagon with a nonzero divisor.
  SpecialLines,
};

class HexagonDivisionError : public std::runtime_error {
 public:
  HexagonDivisionError(int m, int n)
      : std::runtime_error("zero divisor at (" + std::to_string(m) + "," + std::to_string(n) + ")"),
        m_(m),
        n_(n) {}
  int m() const { return m_; }
  int n() const { return n_; }

 private:
  int m_, n_;
};

HexLattice f_reconstruct(const Window& window, Seed seed);

struct RelationCheck {
  std::string relation;
  std::string point;
  std::string lhs;
  std::string rhs;
  bool pass;
};

// m,n symmetry, the F rescalings and specialisations, the G reflections and
// the G evaluations against f, each at every applicable point of the window
// (restricted to m, n >= 0 for the polynomial relations).
std::vector<RelationCheck> symmetry_suite(const Window& window);

std::string to_string(const Rational& q);

}  // namespace rpm
