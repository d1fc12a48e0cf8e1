#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rpm {

using Integer = mpz_class;
using Rational = mpq_class;

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int32_t value;
};

// Square integer matrix stored as (row, col, value) triplets sorted by column,
// then row.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<MatrixEntry> entries;
};

std::vector<Integer> multiply(const SparseMatrix& a, const std::vector<Integer>& x);

class KernelDimensionError : public std::runtime_error {
 public:
  KernelDimensionError(std::size_t dimension, const std::string& what)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

enum class KernelMethod { Auto, Bareiss, Modular };

struct KernelOptions {
  KernelMethod method = KernelMethod::Auto;
  // Auto switches from Bareiss to the modular route above this dimension.
  std::size_t bareiss_limit = 160;
};

// Primitive integer vector spanning the one-dimensional kernel of `a`, with
// the sign chosen so the first nonzero entry is positive. Throws
// KernelDimensionError when the kernel is not one-dimensional.
std::vector<Integer> kernel_bareiss(const SparseMatrix& a);

// Same result via elimination modulo word-sized primes, Chinese remaindering
// and rational reconstruction. The candidate is accepted only after an exact
// check a * v = 0 over the integers.
std::vector<Integer> kernel_modular(const SparseMatrix& a);

std::vector<Integer> integer_kernel(const SparseMatrix& a, const KernelOptions& options = {});

// Divide by the gcd and fix the sign of the first nonzero entry.
void make_primitive(std::vector<Integer>& v);

}  // namespace rpm
