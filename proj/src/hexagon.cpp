#include "rpm/hexagon.hpp"

#include <array>
#include <sstream>

namespace rpm {

namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

Rational power(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  if (e < 0) r = 1 / r;
  return r;
}

// a!/b! with Pochhammer semantics.
bool factorial_ratio(long a, long b, Rational& acc) {
  if (a >= b) {
    for (long j = b + 1; j <= a; ++j) acc *= j;
    return true;
  }
  Integer d = 1;
  for (long j = a + 1; j <= b; ++j) {
    if (j == 0) return false;
    d *= j;
  }
  acc /= Rational(d);
  return true;
}

// (2a-1)!!/(2b-1)!!
void double_factorial_ratio(long a, long b, Rational& acc) {
  if (a >= b) {
    for (long j = b + 1; j <= a; ++j) acc *= 2 * j - 1;
    return;
  }
  Integer d = 1;
  for (long j = a + 1; j <= b; ++j) d *= 2 * j - 1;
  acc /= Rational(d);
}

Integer odd_factorial(long k) {
  Integer r = 1;
  for (long j = 1; j <= k; j += 2) r *= j;
  return r;
}

std::optional<Rational> product_formula(long m, long n) {
  Rational r = 1;
  if (n >= 0) {
    r /= Rational(Integer(1) << static_cast<unsigned long>(n * n / 4));
    for (long p = 1; p <= n; ++p) r /= Rational(odd_factorial(2 * p - 1));
    for (long p = 0; p <= floor_div(n - 1, 3); ++p) {
      if (!factorial_ratio(m - floor_div(n + p, 2) - p - 1, m - 2 * n + 3 * p, r)) return std::nullopt;
    }
    for (long p = 0; p <= floor_div(n - 2, 3); ++p) {
      double_factorial_ratio(m + n - 3 * p - 1, m - floor_div(n + p, 2) + 2 * p + 1, r);
    }
    return r;
  }
  const long mm = -m, nn = -n;
  r /= Rational(Integer(1) << static_cast<unsigned long>(nn * nn / 4));
  for (long p = 1; p <= nn - 1; ++p) r /= Rational(odd_factorial(2 * p - 1));
  for (long p = 0; p <= nn / 3 - 1; ++p) {
    if (!factorial_ratio(mm - floor_div(nn + p, 2) - p - 2, mm - 2 * nn + 3 * p + 2, r)) return std::nullopt;
  }
  for (long p = 0; p <= floor_div(nn - 2, 3); ++p) {
    double_factorial_ratio(mm + nn - 3 * p - 2, mm - floor_div(nn + p, 2) + 2 * p, r);
  }
  return r;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> special_line_value(long m, long n) {
  if (n == 0 || n == -1) return Rational(1);
  if ((n > 0 && m == 2 * n - 1) || (m > 0 && n == 2 * m - 1) || (n < -2 && m == 2 * n + 3) ||
      (m < -2 && n == 2 * m + 3)) {
    return Rational(0);
  }
  if (m == 0) {
    if (n >= 0) return power(-1, floor_div(4 * n, 3)) * power(2, n / 3);
    return power(Rational(-1, 2), floor_div(-2 * n, 3));
  }
  if (m == -1) {
    if (n >= 1) return power(-2, floor_div(n + 2, 3));
    const long k = -n;
    return power(-1, floor_div(2 - k, 3)) * power(Rational(1, 2), floor_div(2 * k - 1, 3));
  }
  return std::nullopt;
}

Rational f_closed(long m, long n) {
  if (auto v = product_formula(m, n)) return *v;
  if (auto v = special_line_value(m, n)) return *v;
  throw std::domain_error("closed form divides by zero at (" + std::to_string(m) + "," +
                          std::to_string(n) + ")");
}

bool hexagon_holds(const Rational& a, const Rational& a2, const Rational& b, const Rational& b2,
                   const Rational& c, const Rational& c2) {
  return a * a2 + b * b2 == c * c2;
}

Rational hexagon_residual(long m, long n) {
  return f_closed(m - 1, n) * f_closed(m + 1, n) + f_closed(m, n - 1) * f_closed(m, n + 1) -
         f_closed(m - 1, n - 1) * f_closed(m + 1, n + 1);
}

HexLattice::HexLattice(Window window) : window_(window) {
  if (window.m_hi < window.m_lo || window.n_hi < window.n_lo) throw std::invalid_argument("empty window");
  cells_.resize(static_cast<std::size_t>(window.m_hi - window.m_lo + 1) *
                static_cast<std::size_t>(window.n_hi - window.n_lo + 1));
}

std::size_t HexLattice::offset(int m, int n) const {
  return static_cast<std::size_t>(n - window_.n_lo) * static_cast<std::size_t>(window_.m_hi - window_.m_lo + 1) +
         static_cast<std::size_t>(m - window_.m_lo);
}

bool HexLattice::known(int m, int n) const { return window_.contains(m, n) && cells_[offset(m, n)].has_value(); }

const Rational& HexLattice::at(int m, int n) const {
  if (!known(m, n)) {
    throw std::out_of_range("no value at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  return *cells_[offset(m, n)];
}

void HexLattice::set(int m, int n, Rational value) {
  if (!window_.contains(m, n)) throw std::out_of_range("outside window");
  cells_[offset(m, n)] = std::move(value);
}

std::size_t HexLattice::known_count() const {
  std::size_t k = 0;
  for (const auto& c : cells_) k += c.has_value();
  return k;
}

std::string HexLattice::to_csv() const {
  std::ostringstream out;
  out << "n\\m";
  for (int m = window_.m_lo; m <= window_.m_hi; ++m) out << ',' << m;
  out << '\n';
  for (int n = window_.n_hi; n >= window_.n_lo; --n) {
    out << n;
    for (int m = window_.m_lo; m <= window_.m_hi; ++m) {
      out << ',';
      if (known(m, n)) out << at(m, n).get_str();
    }
    out << '\n';
  }
  return out.str();
}

namespace {

HexLattice crop(const HexLattice& full, const Window& w) {
  HexLattice out(w);
  for (int n = w.n_lo; n <= w.n_hi; ++n) {
    for (int m = w.m_lo; m <= w.m_hi; ++m) {
      if (full.known(m, n)) out.set(m, n, full.at(m, n));
    }
  }
  return out;
}

HexLattice reconstruct_boundary(const Window& window) {
  if (window.m_lo < 0 || window.n_lo < -1) {
    throw std::invalid_argument("the boundary seed only reaches m >= 0, n >= -1");
  }
  const Window inner{0, window.m_hi, -1, std::max(window.n_hi, 0)};
  HexLattice lat(inner);
  for (int m = 0; m <= inner.m_hi; ++m) {
    lat.set(m, 0, 1);
    lat.set(m, -1, 1);
  }
  for (int n = 1; n <= inner.n_hi; ++n) {
    if (2 * n - 1 <= inner.m_hi) lat.set(2 * n - 1, n, 0);
    // Hexagon centred at (m-1, n-1), solved for its upper-right apex.
    for (int m = 2 * n; m <= inner.m_hi; ++m) {
      const Rational& div = lat.at(m - 2, n - 2);
      if (div == 0) throw HexagonDivisionError(m, n);
      lat.set(m, n, (lat.at(m - 2, n - 1) * lat.at(m, n - 1) + lat.at(m - 1, n - 2) * lat.at(m - 1, n)) / div);
    }
  }
  return crop(lat, window);
}

struct Cell {
  int m, n;
};

// Each cell takes part in six hexagons. For each: the centre, the partner
// cell sharing its product, and the two other products with their sign.
bool try_solve(HexLattice& lat, int m, int n) {
  const std::array<Cell, 6> centres{{{m + 1, n}, {m - 1, n}, {m, n + 1}, {m, n - 1}, {m + 1, n + 1}, {m - 1, n - 1}}};
  for (int role = 0; role < 6; ++role) {
    const auto [cm, cn] = centres[role];
    const Cell a{cm - 1, cn}, a2{cm + 1, cn}, b{cm, cn - 1}, b2{cm, cn + 1}, c{cm - 1, cn - 1}, c2{cm + 1, cn + 1};
    const Cell partner = role == 0 ? a2 : role == 1 ? a : role == 2 ? b2 : role == 3 ? b : role == 4 ? c2 : c;
    std::array<Cell, 4> others;
    if (role < 2) others = {b, b2, c, c2};
    else if (role < 4) others = {a, a2, c, c2};
    else others = {a, a2, b, b2};
    if (!lat.known(partner.m, partner.n)) continue;
    bool ready = true;
    for (const Cell& o : others) ready = ready && lat.known(o.m, o.n);
    if (!ready) continue;
    const Rational& p = lat.at(partner.m, partner.n);
    if (p == 0) continue;
    const Rational x = lat.at(others[0].m, others[0].n) * lat.at(others[1].m, others[1].n);
    const Rational y = lat.at(others[2].m, others[2].n) * lat.at(others[3].m, others[3].n);
    // a a' + b b' = c c'
    lat.set(m, n, Rational(role < 4 ? Rational(y - x) : Rational(x + y)) / p);
    return true;
  }
  return false;
}

HexLattice reconstruct_lines(const Window& window) {
  const Window inner{std::min(window.m_lo, -1), std::max(window.m_hi, 0), std::min(window.n_lo, -1),
                     std::max(window.n_hi, 0)};
  HexLattice lat(inner);
  for (int n = inner.n_lo; n <= inner.n_hi; ++n) {
    for (int m = inner.m_lo; m <= inner.m_hi; ++m) {
      if (auto v = special_line_value(m, n)) lat.set(m, n, *v);
    }
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (int n = inner.n_lo; n <= inner.n_hi; ++n) {
      for (int m = inner.m_lo; m <= inner.m_hi; ++m) {
        if (!lat.known(m, n) && try_solve(lat, m, n)) progress = true;
      }
    }
  }
  return crop(lat, window);
}

}  // namespace

HexLattice f_reconstruct(const Window& window, Seed seed) {
  return seed == Seed::Boundary ? reconstruct_boundary(window) : reconstruct_lines(window);
}

}  // namespace rpm
