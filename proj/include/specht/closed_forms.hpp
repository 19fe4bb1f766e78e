#pragma once

#include <string>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/gf.hpp"
#include "specht/partition.hpp"
#include "specht/tableaux.hpp"

namespace specht {

// A pair of partitions (alpha | beta) with the p-adic bookkeeping used by
// the counting formulas: residues s_i of all parts, |alpha|+|beta| = dp+r,
// and sum(s_i) = cp + r.
struct SignedShape {
    Partition alpha, beta;
    int p = 0;
    int m = 0, nn = 0;          // number of alpha rows / beta rows
    std::vector<int> residues;  // s_1..s_{m+nn}
    int d = 0, r = 0, c = 0;

    static SignedShape of(const Partition& alpha, const Partition& beta, int p);
    Composition shape() const;  // concatenated row lengths
    std::string str() const;
};

// All tuples (c_1..c_u) with 0 <= c_i <= ns[i] and sum = s; empty when
// s < 0 or s > sum(ns).
std::vector<std::vector<int>> lambda_set(const std::vector<int>& ns, int s);

// Multiplicity of the stable generic Jordan type (1^N) of the signed
// permutation module restricted to E_s.  Defined for 0 <= s <= d; the
// value at s = 0 is the module dimension.
BigInt n_signed(const SignedShape& shape, int s);

// Hook counting formula; requires r >= 1 and 0 <= s <= d.
BigInt n_hook(const HookData& h, int s);

// Closed forms for the boundary restriction: tag 'i' is the r <= b0 case
// (evaluated at s = d-1, complexity d-1), tag 'ii' the b0 < r case
// (s = d, complexity d).
struct CorollaryValue {
    std::string tag;  // "i" or "ii"
    BigInt value;
    int s_eval = 0;
    int complexity = 0;
};
CorollaryValue corollary_values(const HookData& h);

// Predicted stable type at E_d for hooks with r = 0: (1^binom(d-1,sigma))
// when b0 is even, ((p-1)^binom(d-1,sigma)) when b0 is odd, where
// b = sigma*p + b0.
struct Prediction {
    JordanType stable;
    int complexity = 0;
    std::string source;
};
Prediction thm44_prediction(const HookData& h);

// p-weight of the hook (= predicted complexity of the Specht module).
int predicted_complexity_hook(const Partition& mu, int p);
// d - c for signed permutation modules.
int predicted_complexity_signed(const SignedShape& shape);

// |p-core(mu)| > r criterion for generic freeness of the restriction to E_d.
bool prop24iii_criterion(const Partition& mu, int p);

// Brute-force oracle: number of tabloids of the concatenated shape fixed
// by every generator of E_s.
BigInt fixed_tabloid_count(const Composition& shape, int p, int s, long cap = 1'000'000);

}  // namespace specht
