#include "rpm/kernel.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace rpm {

std::vector<Integer> multiply(const SparseMatrix& a, const std::vector<Integer>& x) {
  if (x.size() != a.n) throw std::invalid_argument("dimension mismatch in multiply");
  std::vector<Integer> y(a.n, 0);
  for (const MatrixEntry& e : a.entries) {
    if (e.value >= 0) {
      mpz_addmul_ui(y[e.row].get_mpz_t(), x[e.col].get_mpz_t(), static_cast<unsigned long>(e.value));
    } else {
      mpz_submul_ui(y[e.row].get_mpz_t(), x[e.col].get_mpz_t(), static_cast<unsigned long>(-e.value));
    }
  }
  return y;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

namespace {

[[noreturn]] void bad_dimension(std::size_t dim) {
  throw KernelDimensionError(dim, "kernel has dimension " + std::to_string(dim) + ", expected 1");
}

}  // namespace

// Fraction-free row echelon form. After processing pivot k every entry below
// the pivot rows is a (k+1)-minor, so the division by the previous pivot is
// exact.
std::vector<Integer> kernel_bareiss(const SparseMatrix& a) {
  const std::size_t n = a.n;
  if (n == 0) bad_dimension(0);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (const MatrixEntry& e : a.entries) m[e.row][e.col] += e.value;

  std::vector<std::size_t> pivot_col;
  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    const Integer& piv = m[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), m[i][c].get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivot_col.push_back(c);
    ++r;
  }
  if (n - r != 1) bad_dimension(n - r);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  const std::size_t free_col =
      static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());

  std::vector<Rational> x(n, 0);
  x[free_col] = 1;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = pivot_col[k];
    Rational acc = 0;
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (m[k][j] != 0 && x[j] != 0) acc += Rational(m[k][j]) * x[j];
    }
    x[pc] = -acc / Rational(m[k][pc]);
  }
  Integer den = 1;
  for (const Rational& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x[i].get_num() * (den / x[i].get_den());
  }
  make_primitive(v);
  return v;
}

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

struct ModularResult {
  std::size_t rank;
  std::vector<u32> x;  // kernel vector when rank == n-1
};

// Echelon form modulo p, skipping rows whose entry in the pivot column is
// already zero; the generator is sparse so most rows are untouched early on.
ModularResult kernel_mod_p(const SparseMatrix& a, u32 p) {
  const std::size_t n = a.n;
  std::vector<u32> m(n * n, 0);
  for (const MatrixEntry& e : a.entries) {
    const long long v = ((static_cast<long long>(e.value) % p) + p) % p;
    u32& cell = m[e.row * n + e.col];
    cell = static_cast<u32>((cell + static_cast<u64>(v)) % p);
  }
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> row_end(n, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t q = r;
    while (q < n && m[q * n + c] == 0) ++q;
    if (q == n) continue;
    if (q != r) std::swap_ranges(m.begin() + q * n + c, m.begin() + q * n + n, m.begin() + r * n + c);
    u32* pr = &m[r * n];
    const u64 inv = inv_mod(pr[c], p);
    for (std::size_t j = c; j < n; ++j) pr[j] = static_cast<u32>(pr[j] * inv % p);
    std::size_t last = c;
    for (std::size_t j = c; j < n; ++j) {
      if (pr[j]) last = j;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      u32* pi = &m[i * n];
      if (pi[c] == 0) continue;
      const u64 f = p - pi[c];
      for (std::size_t j = c; j <= last; ++j) {
        pi[j] = static_cast<u32>((pi[j] + f * pr[j]) % p);
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  ModularResult out{r, {}};
  if (r != n - 1) return out;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  const std::size_t free_col =
      static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
  out.x.assign(n, 0);
  out.x[free_col] = 1;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = pivot_col[k];
    const u32* pk = &m[k * n];
    u64 acc = 0;
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (pk[j] && out.x[j]) acc = (acc + static_cast<u64>(pk[j]) * out.x[j]) % p;
    }
    out.x[pc] = static_cast<u32>((p - acc) % p);
  }
  return out;
}

// Rational a/b with |a|, b <= bound and a = u b (mod M).
bool rational_reconstruct(const Integer& u, const Integer& M, const Integer& bound, Integer& num,
                          Integer& den) {
  Integer r0 = M, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  num = sgn(t1) < 0 ? Integer(-r1) : r1;
  den = abs(t1);
  return true;
}

std::optional<std::vector<Integer>> reconstruct(const std::vector<Integer>& residues, const Integer& M) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), M.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  const std::size_t n = residues.size();
  std::vector<Integer> num(n), den(n);
  Integer common = 1, u, half = M / 2;
  for (std::size_t i = 0; i < n; ++i) {
    u = residues[i] * common % M;
    Integer s = u > half ? Integer(u - M) : u;
    if (abs(s) <= bound) {
      num[i] = s;
      den[i] = common;
      continue;
    }
    Integer a, b;
    if (!rational_reconstruct(u, M, bound, a, b)) return std::nullopt;
    num[i] = a;
    common *= b;
    den[i] = common;
  }
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = num[i] * (common / den[i]);
  make_primitive(v);
  return v;
}

bool is_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::vector<Integer> kernel_modular(const SparseMatrix& a) {
  const std::size_t n = a.n;
  if (n == 0) bad_dimension(0);
  if (n == 1) {
    Integer s = 0;
    for (const MatrixEntry& e : a.entries) s += e.value;
    if (s != 0) bad_dimension(0);
    return {1};
  }
  constexpr int kMaxPrimes = 400;
  constexpr int kMaxDeficient = 4;
  Integer M = 1, prime = Integer(1) << 31;
  std::vector<Integer> residues(n, 0);
  std::optional<std::size_t> ref;
  int deficient = 0;
  std::size_t lowest_rank = n;
  for (int used = 0, tried = 0; tried < kMaxPrimes; ++tried) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u32 p = static_cast<u32>(prime.get_ui());
    ModularResult res = kernel_mod_p(a, p);
    if (res.rank == n) bad_dimension(0);
    if (res.rank < n - 1) {
      lowest_rank = std::min(lowest_rank, res.rank);
      if (++deficient >= kMaxDeficient && used == 0) bad_dimension(n - lowest_rank);
      continue;
    }
    if (!ref) {
      ref = static_cast<std::size_t>(
          std::find_if(res.x.begin(), res.x.end(), [](u32 v) { return v != 0; }) - res.x.begin());
    }
    if (res.x[*ref] == 0) continue;
    const u64 scale = inv_mod(res.x[*ref], p);
    const u64 m_inv = inv_mod(mpz_fdiv_ui(M.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < n; ++i) {
      const u64 xi = res.x[i] * scale % p;
      const u64 ri = mpz_fdiv_ui(residues[i].get_mpz_t(), p);
      const u64 t = (xi + p - ri) % p * m_inv % p;
      mpz_addmul_ui(residues[i].get_mpz_t(), M.get_mpz_t(), t);
    }
    M *= p;
    ++used;
    if (auto v = reconstruct(residues, M); v && is_zero(multiply(a, *v))) return *v;
  }
  throw std::runtime_error("modular kernel did not converge");
}

std::vector<Integer> integer_kernel(const SparseMatrix& a, const KernelOptions& options) {
  switch (options.method) {
    case KernelMethod::Bareiss: return kernel_bareiss(a);
    case KernelMethod::Modular: return kernel_modular(a);
    case KernelMethod::Auto:
      return a.n <= options.bareiss_limit ? kernel_bareiss(a) : kernel_modular(a);
  }
  throw std::invalid_argument("unknown kernel method");
}

}  // namespace rpm
