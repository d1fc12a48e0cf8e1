#include "rpm/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "rpm/hexagon.hpp"

namespace rpm {

LatticePolynomial::LatticePolynomial(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

LatticePolynomial LatticePolynomial::monomial(Integer c, int dx, int dy) {
  LatticePolynomial p;
  if (c != 0) p.terms_[{dx, dy}] = std::move(c);
  return p;
}

void LatticePolynomial::add_term(const Key& k, const Integer& c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

LatticePolynomial LatticePolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  LatticePolynomial p;
  std::size_t i = 0;
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  };
  auto read_exp = [&]() {
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::string d;
      read_int(d);
      if (d.empty()) throw std::invalid_argument("bad exponent in " + s);
      return std::stoi(d);
    }
    return 1;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::string digits;
    read_int(digits);
    int dx = 0, dy = 0;
    while (i < s.size() && (s[i] == 'x' || s[i] == 'y' || s[i] == '*')) {
      const char v = s[i++];
      if (v == 'x') dx += read_exp();
      if (v == 'y') dy += read_exp();
    }
    if (digits.empty() && dx == 0 && dy == 0) throw std::invalid_argument("cannot parse " + s);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    p.add_term({dx, dy}, sign * c);
  }
  return p;
}

Integer LatticePolynomial::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LatticePolynomial::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : terms_) {
    const int deg = k.first + k.second;
    if (d && *d != deg) return std::nullopt;
    d = deg;
  }
  return d;
}

int LatticePolynomial::degree_y() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rational LatticePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < k.first; ++j) t *= x;
    for (int j = 0; j < k.second; ++j) t *= y;
    sum += t;
  }
  return sum;
}

std::string LatticePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool vars = k.first || k.second;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    const Integer a = abs(c);
    if (a != 1 || !vars) out += a.get_str();
    if (k.first) out += k.first == 1 ? std::string("x") : "x^" + std::to_string(k.first);
    if (k.second) out += k.second == 1 ? std::string("y") : "y^" + std::to_string(k.second);
  }
  return out;
}

LatticePolynomial& LatticePolynomial::operator+=(const LatticePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LatticePolynomial& LatticePolynomial::operator-=(const LatticePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LatticePolynomial operator*(const LatticePolynomial& a, const LatticePolynomial& b) {
  LatticePolynomial r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return r;
}

std::optional<LatticePolynomial> divide_exact(const LatticePolynomial& num, const LatticePolynomial& den) {
  if (den.is_zero()) return std::nullopt;
  const auto& [dk, dc] = *den.terms_.rbegin();
  LatticePolynomial rem = num, quot;
  while (!rem.is_zero()) {
    const auto& [rk, rc] = *rem.terms_.rbegin();
    if (rk.first < dk.first || rk.second < dk.second || !mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) {
      return std::nullopt;
    }
    const LatticePolynomial t = LatticePolynomial::monomial(rc / dc, rk.first - dk.first, rk.second - dk.second);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

LatticePolynomial pow(const LatticePolynomial& p, int e) {
  LatticePolynomial r = 1;
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

LatticePolynomial sign(int e) { return (e % 2 == 0) ? 1 : -1; }

LatticePolynomial solve(const LatticePolynomial& num, const LatticePolynomial& den, int m, int n, char tag) {
  auto q = divide_exact(num, den);
  if (!q) {
    throw PolynomialDivisionError(std::string("inexact division for ") + tag + "_{" + std::to_string(m) + "," +
                                  std::to_string(n) + "}");
  }
  return *q;
}

}  // namespace

LatticePolynomial g_row0(int m) {
  const LatticePolynomial x = LatticePolynomial::x();
  return pow(x, (m + 1) / 3) * pow(x + 1, m / 3) * sign(m / 3 + m / 2);
}

LatticePolynomial g_row1(int m) {
  const LatticePolynomial x = LatticePolynomial::x();
  return pow(x, m / 3) * pow(x + 1, (m + 2) / 3) * sign((m + 2) / 3 + (m + 1) / 2);
}

FTable::FTable(int m_max, int n_max) : m_max_(m_max), n_max_(n_max) {
  const LatticePolynomial x = LatticePolynomial::x(), y = LatticePolynomial::y();
  for (int m = 1; m <= m_max; ++m) cells_[{m, 0}] = 1;
  if (n_max >= 1) {
    for (int m = 1; m <= m_max; ++m) cells_[{m, 1}] = m == 1 ? LatticePolynomial(0) : y + x * (m - 2);
  }
  for (int n = 2; n <= n_max; ++n) {
    if (2 * n - 1 <= m_max) cells_[{2 * n - 1, n}] = 0;
    for (int m = 2 * n; m <= m_max; ++m) {
      const auto num = at(m - 2, n - 1) * at(m, n - 1) + at(m - 1, n - 2) * at(m - 1, n);
      cells_[{m, n}] = solve(num, at(m - 2, n - 2), m, n, 'F');
    }
  }
}

bool FTable::defined(int m, int n) const { return cells_.count({m, n}) > 0; }

const LatticePolynomial& FTable::at(int m, int n) const {
  auto it = cells_.find({m, n});
  if (it == cells_.end()) {
    throw std::out_of_range("F_{" + std::to_string(m) + "," + std::to_string(n) + "} not in table");
  }
  return it->second;
}

GTable::GTable(int total) : total_(total) {
  const LatticePolynomial x = LatticePolynomial::x();
  for (int n = 0; n <= total; ++n) cells_[{0, n}] = n == 0 ? g_row0(0) : LatticePolynomial(1);
  for (int n = 0; n + 1 <= total; ++n) cells_[{1, n}] = x * n + 1;
  for (int m = 2; m <= total; ++m) cells_[{m, 0}] = g_row0(m);
  for (int m = 1; m + 1 <= total; ++m) {
    for (int n = 0; (m + 1) + (n + 1) <= total; ++n) {
      const auto num = at(m, n + 2) * at(m, n) + at(m + 1, n) * at(m - 1, n + 2);
      cells_[{m + 1, n + 1}] = solve(num, at(m - 1, n + 1), m + 1, n + 1, 'G');
    }
  }
}

bool GTable::defined(int m, int n) const { return cells_.count({m, n}) > 0; }

const LatticePolynomial& GTable::at(int m, int n) const {
  auto it = cells_.find({m, n});
  if (it == cells_.end()) {
    throw std::out_of_range("G_{" + std::to_string(m) + "," + std::to_string(n) + "} not in table");
  }
  return it->second;
}

LatticePolynomial poly_F(int m, int n) {
  if (n < 0 || m < 1 || m < 2 * n - 1) throw std::invalid_argument("F_{m,n} needs n >= 0, m >= max(1, 2n-1)");
  return FTable(m, n).at(m, n);
}

LatticePolynomial poly_G(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("G_{m,n} needs m, n >= 0");
  return GTable(m + n).at(m, n);
}

namespace {

struct Suite {
  std::vector<RelationCheck> out;
  void add(const std::string& rel, int m, int n, const Rational& lhs, const Rational& rhs) {
    out.push_back({rel, "(" + std::to_string(m) + "," + std::to_string(n) + ")", lhs.get_str(), rhs.get_str(),
                   lhs == rhs});
  }
  void add_poly(const std::string& rel, int m, int n, const LatticePolynomial& lhs, const LatticePolynomial& rhs) {
    out.push_back({rel, "(" + std::to_string(m) + "," + std::to_string(n) + ")", lhs.str(), rhs.str(), lhs == rhs});
  }
};

std::optional<Rational> try_f(long m, long n) {
  try {
    return f_closed(m, n);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

Rational two_pow(int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= 2;
  return e < 0 ? Rational(1 / r) : r;
}

Rational minus_one_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<RelationCheck> symmetry_suite(const Window& w) {
  Suite s;
  for (int n = w.n_lo; n <= w.n_hi; ++n) {
    for (int m = w.m_lo; m <= w.m_hi; ++m) {
      if (auto v = special_line_value(m, n)) {
        if (auto f = try_f(m, n)) s.add("special-lines", m, n, *f, *v);
      }
      try {
        const Rational lhs = f_closed(m - 1, n) * f_closed(m + 1, n) + f_closed(m, n - 1) * f_closed(m, n + 1);
        s.add("hexagon", m, n, lhs, f_closed(m - 1, n - 1) * f_closed(m + 1, n + 1));
      } catch (const std::domain_error&) {
      }
      if (m >= n && n >= 0 && try_f(m, n) && try_f(n, m)) {
        s.add("mn-symm", m, n, f_closed(m, n),
              minus_one_pow(m * n + floor_div(4 * (m + n), 3)) * two_pow(-floor_div(m - 2 * n, 3)) * f_closed(n, m));
      }
      if (auto f = try_f(m, n)) {
        if (n >= 0) s.add("integral", m, n, f->get_den(), 1);
        if (n <= -1) {
          const Rational scaled = *f * two_pow(-n - 1);
          s.add("laurent", m, n, scaled.get_den(), 1);
        }
      }
    }
  }

  // F_{1,1} = 0 is a seed of the zero line and does not follow the (1,0)
  // and (2,3) specialisations; those two checks skip it.
  const int m_hi = std::max(w.m_hi, 1), n_hi = std::max(w.n_hi, 0);
  const FTable F(m_hi + 2, n_hi + 1);
  const GTable G(m_hi + n_hi + 2);
  const LatticePolynomial X = LatticePolynomial::x(), Y = LatticePolynomial::y();
  const std::vector<std::pair<Rational, Rational>> points{{2, 3}, {Rational(-1, 2), 5}, {Rational(7, 3), -2}};
  const std::vector<Rational> xs{2, Rational(1, 3), Rational(-5, 2)};
  for (int n = std::max(w.n_lo, 0); n <= w.n_hi; ++n) {
    for (int m = std::max(w.m_lo, 0); m <= w.m_hi; ++m) {
      if (F.defined(m, n)) {
        const LatticePolynomial& p = F.at(m, n);
        if (!p.is_zero()) s.add("rescale1-degree", m, n, *p.homogeneous_degree(), n);
        for (const auto& [a, b] : points) {
          Rational yn = 1;
          for (int i = 0; i < n; ++i) yn *= b;
          s.add("rescale1", m, n, p.evaluate(a, b), yn * p.evaluate(a / b, 1));
        }
        Rational xn = 1;
        for (int i = 0; i < n; ++i) xn *= Rational(3, 2);
        s.add("rescale2", m, n, p.evaluate(Rational(3, 2), 0), xn * p.evaluate(1, 0));
        if (m == 2 * n && n >= 1) s.add_poly("rescale3", m, n, p, Y * F.at(m, n - 1));
        s.add("F(1,1)", m, n, p.evaluate(1, 1), f_closed(m, n));
        if (!(m == 1 && n == 1)) s.add("F(2,3)", m, n, p.evaluate(2, 3), two_pow(n) * f_closed(-m, -n - 1));
        if (n >= 1 && F.defined(m - 1, n - 1) && F.defined(m - 1, n) && F.defined(m, n - 1) &&
            F.defined(m, n + 1) && F.defined(m + 1, n) && F.defined(m + 1, n + 1)) {
          s.add_poly("F-hexagon", m, n, F.at(m - 1, n) * F.at(m + 1, n) + F.at(m, n - 1) * F.at(m, n + 1),
                     F.at(m - 1, n - 1) * F.at(m + 1, n + 1));
        }
      }
      if (F.defined(m + 1, n) && !(m == 0 && n == 1)) s.add("F(1,0)", m, n, F.at(m + 1, n).evaluate(1, 0), f_closed(m, n));
      if (F.defined(m + 2, n + 1)) s.add("F(0,1)", m, n, F.at(m + 2, n + 1).evaluate(0, 1), f_closed(m, n));

      if (!G.defined(m, n)) continue;
      const LatticePolynomial& g = G.at(m, n);
      s.add("Gf(0)", m, n, g.evaluate(0), f_closed(m + n - 1, m - 1));
      s.add("Gf(1)", m, n, g.evaluate(1), minus_one_pow((m + 1) / 2) * f_closed(-n, m));
      if (n == 1) s.add_poly("boundG2", m, n, g, g_row1(m));
      if (m >= 1 && G.defined(m - 1, n + 1)) {
        s.add("reflect2", m, n, g.evaluate(0), minus_one_pow(m + 1) * G.at(m - 1, n + 1).evaluate(-1));
      }
      const int mt = n - 1, nt = m + 1;
      if (mt >= 0 && G.defined(mt, nt)) {
        for (const Rational& x : xs) {
          const Rational xt = -1 - x;
          Rational rhs = minus_one_pow(floor_div(m + n, 2)) * G.at(mt, nt).evaluate(xt);
          const int ex = floor_div(m - n + 1, 3), et = floor_div(mt - nt + 1, 3);
          for (int i = 0; i < std::abs(ex); ++i) rhs = ex > 0 ? Rational(rhs * x) : Rational(rhs / x);
          for (int i = 0; i < std::abs(et); ++i) rhs = et > 0 ? Rational(rhs / xt) : Rational(rhs * xt);
          s.add("reflect", m, n, g.evaluate(x), rhs);
        }
      }
      if (m >= 1 && n >= 1 && G.defined(m, n + 1) && G.defined(m + 1, n) && G.defined(m + 1, n - 1) &&
          G.defined(m - 1, n + 1)) {
        s.add_poly("G-hexagon", m, n, G.at(m, n + 1) * G.at(m, n - 1) + G.at(m + 1, n - 1) * G.at(m - 1, n + 1),
                   G.at(m - 1, n) * G.at(m + 1, n));
      }
    }
  }
  return s.out;
}

}  // namespace rpm
