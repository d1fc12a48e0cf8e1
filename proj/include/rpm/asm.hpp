#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rpm/hexagon.hpp"
#include "rpm/kernel.hpp"

namespace rpm {

// Alternating sign matrix counts: all (A), vertically symmetric (AV),
// vertically and horizontally symmetric (AVH), half-turn symmetric (AHT).
enum class AsmKind { A, AV, AVH, AHT };

std::string_view to_string(AsmKind kind);
std::optional<AsmKind> parse_asm_kind(std::string_view text);

// AV and AVH need odd n. Throws std::invalid_argument on a parity or range
// violation and std::logic_error if a product fails to be integral.
Integer asm_number(AsmKind kind, int n);

// prod_{0<=i<p} (3i+1)(6i)!(2i)! / ((4i)!(4i+1)!), the common value of
// AVH_{4p-1}/AV_{2p-1} and AVH_{4p+1}/AV_{2p+1}.
Integer n_s(int p);

// (3p-1) C(6p-3, 2p-1) / ((4p-1) C(4p-2, 2p-1)), the ratio AV_{2p+1}/AV_{2p-1}.
Rational av_step_ratio(int p);

struct AsmRow {
  int n;
  Integer A, AHT;
  std::optional<Integer> AV, AVH;
};

std::vector<AsmRow> asm_table(int n_max);

// Evaluations of F and G at special points against the counts above, the
// ratio recursion, and the stationary-state identities S^(a)_{2p} = AV_{2p+1}
// (2p <= conj_max_L) and S^(b)_L = AVH_{2L+3} (L <= conj_max_L).
std::vector<RelationCheck> asm_identity_suite(int n_max, int conj_max_L = 8);

}  // namespace rpm
