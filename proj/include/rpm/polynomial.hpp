#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpm/kernel.hpp"

namespace rpm {

enum class PolyFamily { F, G };

// Sparse polynomial in x, y with integer coefficients. Terms are keyed by
// (deg_x, deg_y); zero coefficients are never stored.
class LatticePolynomial {
 public:
  using Key = std::pair<int, int>;

  LatticePolynomial() = default;
  LatticePolynomial(long c);  // NOLINT: implicit constants read naturally
  static LatticePolynomial monomial(Integer c, int dx, int dy);
  static LatticePolynomial x() { return monomial(1, 1, 0); }
  static LatticePolynomial y() { return monomial(1, 0, 1); }
  // Accepts strings such as "2+5x+3x^2", "85x^2+42xy+6y^2", "-4x-9x^2-5x^3".
  static LatticePolynomial parse(std::string_view text);

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int dx, int dy) const;
  // Degree when every term has the same total degree, otherwise nullopt.
  std::optional<int> homogeneous_degree() const;
  int degree_y() const;

  Rational evaluate(const Rational& x, const Rational& y = 1) const;
  // Canonical form, descending in x then y: "85x^2+42xy+6y^2".
  std::string str() const;

  LatticePolynomial& operator+=(const LatticePolynomial& o);
  LatticePolynomial& operator-=(const LatticePolynomial& o);
  friend LatticePolynomial operator+(LatticePolynomial a, const LatticePolynomial& b) { return a += b; }
  friend LatticePolynomial operator-(LatticePolynomial a, const LatticePolynomial& b) { return a -= b; }
  friend LatticePolynomial operator*(const LatticePolynomial& a, const LatticePolynomial& b);
  friend bool operator==(const LatticePolynomial& a, const LatticePolynomial& b) { return a.terms_ == b.terms_; }

  // Quotient when `den` divides `num` exactly over Z[x,y], else nullopt.
  // Leading terms are taken in lex order with x > y.
  friend std::optional<LatticePolynomial> divide_exact(const LatticePolynomial& num, const LatticePolynomial& den);

 private:
  void add_term(const Key& k, const Integer& c);
  std::map<Key, Integer> terms_;
};

LatticePolynomial pow(const LatticePolynomial& p, int e);

class PolynomialDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// F_{m,n}(x,y) on n >= 0, m >= 2n-1 (m >= 1), built row by row from
// F_{m,0} = 1, F_{m,1} = y + (m-2)x, F_{2n-1,n} = 0.
class FTable {
 public:
  FTable(int m_max, int n_max);
  bool defined(int m, int n) const;
  const LatticePolynomial& at(int m, int n) const;
  int m_max() const { return m_max_; }
  int n_max() const { return n_max_; }

 private:
  int m_max_, n_max_;
  std::map<std::pair<int, int>, LatticePolynomial> cells_;
};

// G_{m,n}(x) on m, n >= 0, built from G_{0,n} = 1, G_{1,n} = 1 + nx and the
// row G_{m,0}. Every cell with m + n <= total is available.
class GTable {
 public:
  explicit GTable(int total);
  bool defined(int m, int n) const;
  const LatticePolynomial& at(int m, int n) const;
  int total() const { return total_; }

 private:
  int total_;
  std::map<std::pair<int, int>, LatticePolynomial> cells_;
};

LatticePolynomial poly_F(int m, int n);
LatticePolynomial poly_G(int m, int n);
// Closed form of the n = 0 row of G (used at m = 0 too, where it gives 1).
LatticePolynomial g_row0(int m);
// Closed form of the n = 1 row of G.
LatticePolynomial g_row1(int m);

}  // namespace rpm
