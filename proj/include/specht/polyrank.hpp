#pragma once

#include "specht/gf.hpp"
#include "specht/reps.hpp"

namespace specht {

// Exact generic rank sequence computed over the rational function field
// GF(p)(x_1..x_s) by fraction-free elimination on matrices with polynomial
// entries.  Tiny-case oracle for the sampling pipeline: s <= 2 and small
// dimensions only.
RankSequence generic_rank_sequence_symbolic(const RepE& rep, long term_cap = 100'000);

JordanType generic_jordan_type_symbolic(const RepE& rep, long term_cap = 100'000);

}  // namespace specht
