#include "rpm/asm.hpp"

#include <stdexcept>
#include <string>

#include "rpm/polynomial.hpp"
#include "rpm/stationary.hpp"

namespace rpm {

namespace {

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// gmpxx leaves two-argument construction uncanonicalised.
Rational frac(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Integer integral(const Rational& q, const char* what, int n) {
  if (q.get_den() != 1) {
    throw std::logic_error(std::string(what) + "_" + std::to_string(n) + " is not integral: " + q.get_str());
  }
  return q.get_num();
}

Integer av(int n) {
  const long p = (n - 1) / 2;
  Rational r = 1;
  for (long i = 1; i <= p; ++i) {
    for (long j = 1; j <= 2 * p + 1; ++j) r *= frac(6 * i - 3 * j + 1, 2 * i - j + 2 * p + 1);
  }
  Integer sign_pow;
  mpz_pow_ui(sign_pow.get_mpz_t(), Integer(-3).get_mpz_t(), static_cast<unsigned long>(p * p));
  return integral(r * sign_pow, "AV", n);
}

Integer a_count(int n) {
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= frac(factorial(3 * k + 1), factorial(n + k));
  return integral(r, "A", n);
}

Integer aht(int n) {
  Rational r = 1;
  if (n % 2 == 0) {
    const Integer a = a_count(n / 2);
    r = a * a;
    for (long k = 0; k < n / 2; ++k) r *= frac(3 * k + 2, 3 * k + 1);
  } else {
    for (long k = 1; k <= n / 2; ++k) {
      const Rational t = frac(factorial(3 * k) * factorial(k), factorial(2 * k) * factorial(2 * k));
      r *= Rational(4, 3) * t * t;
    }
  }
  return integral(r, "AHT", n);
}

}  // namespace

std::string_view to_string(AsmKind kind) {
  switch (kind) {
    case AsmKind::A: return "A";
    case AsmKind::AV: return "AV";
    case AsmKind::AVH: return "AVH";
    case AsmKind::AHT: return "AHT";
  }
  return "?";
}

std::optional<AsmKind> parse_asm_kind(std::string_view text) {
  for (AsmKind k : {AsmKind::A, AsmKind::AV, AsmKind::AVH, AsmKind::AHT}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

Integer n_s(int p) {
  if (p < 0) throw std::invalid_argument("n_s needs p >= 0");
  Rational r = 1;
  for (long i = 0; i < p; ++i) {
    r *= frac((3 * i + 1) * factorial(6 * i) * factorial(2 * i), factorial(4 * i) * factorial(4 * i + 1));
  }
  return integral(r, "N_S", p);
}

Rational av_step_ratio(int p) {
  if (p < 1) throw std::invalid_argument("av_step_ratio needs p >= 1");
  return frac((3 * p - 1) * binomial(6 * p - 3, 2 * p - 1), (4 * p - 1) * binomial(4 * p - 2, 2 * p - 1));
}

Integer asm_number(AsmKind kind, int n) {
  if (n < 0) throw std::invalid_argument("asm_number needs n >= 0");
  if ((kind == AsmKind::AV || kind == AsmKind::AVH) && n % 2 == 0) {
    throw std::invalid_argument(std::string(to_string(kind)) + " needs odd n");
  }
  switch (kind) {
    case AsmKind::A: return a_count(n);
    case AsmKind::AHT: return aht(n);
    case AsmKind::AV: return av(n);
    case AsmKind::AVH:
      if (n % 4 == 1) return av((n - 1) / 2 + 1) * n_s((n - 1) / 4);
      return av((n + 1) / 2 - 1) * n_s((n + 1) / 4);
  }
  throw std::invalid_argument("unknown kind");
}

std::vector<AsmRow> asm_table(int n_max) {
  std::vector<AsmRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    AsmRow row{n, asm_number(AsmKind::A, n), asm_number(AsmKind::AHT, n), std::nullopt, std::nullopt};
    if (n % 2 == 1) {
      row.AV = asm_number(AsmKind::AV, n);
      row.AVH = asm_number(AsmKind::AVH, n);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct Checks {
  std::vector<RelationCheck> out;
  void add(const std::string& rel, int n, const Rational& lhs, const Rational& rhs) {
    out.push_back({rel, "n=" + std::to_string(n), lhs.get_str(), rhs.get_str(), lhs == rhs});
  }
};

Rational pow_q(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<RelationCheck> asm_identity_suite(int n_max, int conj_max_L) {
  if (n_max < 1 || n_max > 6) throw std::invalid_argument("asm_identity_suite needs 1 <= n_max <= 6");
  Checks c;
  const FTable F(2 * n_max + 1, n_max + 1);
  const GTable G(2 * n_max + 3);
  const Rational half(-1, 2);
  auto AV = [](int n) { return asm_number(AsmKind::AV, n); };
  auto AVH = [](int n) { return asm_number(AsmKind::AVH, n); };
  auto A = [](int n) { return asm_number(AsmKind::A, n); };
  auto AHT = [](int n) { return asm_number(AsmKind::AHT, n); };

  for (int n = 0; n <= n_max; ++n) {
    if (n >= 1) {
      c.add("asm1 F(2n,n-1)(1,1)", n, F.at(2 * n, n - 1).evaluate(1, 1), AV(2 * n + 1));
      c.add("asm1 F(2n,n)(1,1)", n, F.at(2 * n, n).evaluate(1, 1), AV(2 * n + 1));
      c.add("asm1 G(n+1,n)(0)", n, G.at(n + 1, n).evaluate(0), AV(2 * n + 1));
      c.add("asm1 G(n,n+1)(0)", n, G.at(n, n + 1).evaluate(0), AV(2 * n + 1));
      c.add("asm2 F(2n-1,n-1)(1,1)", n, F.at(2 * n - 1, n - 1).evaluate(1, 1), n_s(n));
      c.add("asm2 AVH(4n-1)/AV(2n-1)", n, frac(AVH(4 * n - 1), AV(2 * n - 1)), n_s(n));
      c.add("asm5 F(2n,n-1)(2,3)", n, F.at(2 * n, n - 1).evaluate(2, 3), frac(A(2 * n - 1), AV(2 * n - 1)));
      c.add("asm5 F(2n,n)(2,3)/3", n, F.at(2 * n, n).evaluate(2, 3) / 3, frac(A(2 * n - 1), AV(2 * n - 1)));
      c.add("id AV ratio", n, frac(AV(2 * n + 1), AV(2 * n - 1)), av_step_ratio(n));
      c.add("id AVH ratio", n, frac(AVH(4 * n + 1), AVH(4 * n - 1)), av_step_ratio(n));
    }
    c.add("asm2 G(n,n)(0)", n, G.at(n, n).evaluate(0), n_s(n));
    c.add("asm2 AVH(4n+1)/AV(2n+1)", n, frac(AVH(4 * n + 1), AV(2 * n + 1)), n_s(n));
    c.add("asm5 F(2n+1,n)(2,3)", n, F.at(2 * n + 1, n).evaluate(2, 3), frac(AHT(4 * n), A(2 * n) * n_s(n)));
    c.add("asm3 G(n,n)(1)", n, G.at(n, n).evaluate(1), AHT(2 * n));
    c.add("asm3 G(n,n+1)(1)", n, G.at(n, n + 1).evaluate(1), AHT(2 * n + 1));
    c.add("asm3 G(n+1,n)(1)", n, G.at(n + 1, n).evaluate(1), A(n) * A(n + 1));
    c.add("asm4 G(n,n+2)(1)", n, G.at(n, n + 2).evaluate(1), A(n + 1) * A(n + 1));
    const Rational two_n = pow_q(2, n);
    c.add("G(n,n)(-1/2)", n, G.at(n, n).evaluate(half), Rational(AVH(2 * n + 1) * AVH(2 * n + 1)) / two_n);
    c.add("G(n+1,n)(-1/2)", n, G.at(n + 1, n).evaluate(half), Rational(AVH(2 * n + 1) * AVH(2 * n + 3)) / two_n);
    // The even-n values follow AV_{n+1}; see the README.
    const Rational gnn1 = n % 2 == 1 ? Rational(0) : pow_q(Rational(AV(n + 1)), 4) / two_n;
    c.add("G(n,n+1)(-1/2)", n, G.at(n, n + 1).evaluate(half), gnn1);
    static constexpr int p_of[4] = {1, 3, 3, 1};
    const Rational asm6 = pow_q(Rational(AV(4 * ((n + 2) / 4) + 1)), p_of[(n + 2) % 4]) *
                          pow_q(Rational(AV(4 * (n / 4) + 3)), p_of[n % 4]) / (two_n * 2);
    c.add("asm6 G(n+2,n)(-1/2)", n, G.at(n + 2, n).evaluate(half), asm6);
  }

  for (int L = 1; L <= conj_max_L; ++L) {
    if (L % 2 == 0) {
      c.add("S^(a)_L = AV_{L+1}", L, summarize(stationary_state(Model::A, L)).S, AV(L + 1));
    }
    c.add("S^(b)_L = AVH_{2L+3}", L, summarize(stationary_state(Model::B, L)).S, AVH(2 * L + 3));
  }
  return c.out;
}

}  // namespace rpm
