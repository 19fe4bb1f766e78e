#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/gf.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/tableaux.hpp"

namespace specht {

// Desk-scale guards; overridable by callers.
struct Caps {
    long ambient_cap = 50'000;  // tabloid-space dimension
    long specht_cap = 500;      // standard-basis dimension
    long colgroup_cap = 2'000'000;
};

// Generators of E_s inside S_n: disjoint p-cycles on consecutive blocks.
std::vector<Perm> e_generators(int n, int s, int p);

// Monomial operator: basis j -> sign[j] * e_{perm[j]}; signs are stored
// reduced mod p (so -1 becomes +1 when p = 2).
struct MonomialGen {
    std::vector<int32_t> perm;
    std::vector<int8_t> sign;
};

// A module over kE_s given by commuting order-p generator matrices.  The
// action is carried either monomially on an ambient basis (optionally cut
// down to an invariant subspace by a basis matrix) or by dense matrices
// over GF(p).
struct RepE {
    int p = 0, s = 0;
    int dim = 0;  // module dimension
    std::string label;

    std::vector<MonomialGen> mono;
    std::vector<MatrixF> dense;
    std::optional<MatrixF> basis;  // ambient_dim x dim over GF(p); columns span the module

    // Nontrivial orbits of the E_s-action on the ambient basis (monomial
    // reps without a subspace restriction); computed at construction.
    std::vector<std::vector<int32_t>> orbits;

    bool is_monomial() const { return dense.empty(); }
    int ambient_dim() const {
        return is_monomial() && !mono.empty() ? static_cast<int>(mono[0].perm.size()) : dim;
    }

    // Checks G_i^p = I and pairwise commutation (mod p); throws on failure.
    void validate() const;
};

RepE zero_rep(int p, int s);
RepE trivial_rep(int p, int s);
RepE regular_rep(int p, int s);  // free module kE_s, dim p^s

RepE specht_rep_ambient(const Partition& mu, int p, int s, const Caps& caps = {});
RepE specht_rep_straightened(const Partition& mu, int p, int s, const Caps& caps = {});
// Exterior-power model of the hook S^(a,1^b); independent of tableau
// combinatorics.  Requires a hook and n <= 10.
RepE specht_rep_wedge(const Partition& mu, int p, int s, const Caps& caps = {});
// backend: "ambient" | "straight" | "wedge" | "auto"
RepE specht_rep(const Partition& mu, int p, int s, const std::string& backend,
                const Caps& caps = {});

RepE signed_perm_rep(const Partition& alpha, const Partition& beta, int p, int s,
                     const Caps& caps = {});

RepE direct_sum(const RepE& a, const RepE& b);

struct PointOnE {
    const FieldCtx* F = nullptr;
    std::vector<Fq> coords;  // one per generator; not all zero
    uint64_t seed = 0;       // RNG key used to draw it (0 when manual)
};

PointOnE sample_point(const FieldCtx& F, int s, uint64_t sample_seed);

// Dense U = I + sum alpha_i (G_i - I) on the generators' own basis (the
// ambient one for monomial reps).  Guarded by size.
MatrixF u_alpha_matrix(const RepE& rep, const PointOnE& pt);

RankSequence rank_sequence_at(const RepE& rep, const PointOnE& pt);
JordanType jordan_at_point(const RepE& rep, const PointOnE& pt);

struct GenericTypeReport {
    JordanType jordan;
    JordanType stable;
    int samples = 0;
    bool attained_by_single_sample = false;
    std::vector<uint64_t> seeds;  // per-sample RNG keys
    RankSequence max_seq;
    std::vector<RankSequence> sample_seqs;
};

GenericTypeReport generic_jordan_type(const RepE& rep, int samples, int ext, uint64_t seed);

// True iff the sampled generic Jordan type is (p^(dim/p)).
bool is_generically_free(const RepE& rep, int samples, int ext, uint64_t seed);

}  // namespace specht
