#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specht/closed_forms.hpp"
#include "specht/common.hpp"
#include "specht/polyrank.hpp"
#include "specht/reps.hpp"

using namespace specht;

namespace {

PointOnE manual_point(const FieldCtx& F, std::vector<long> vals) {
    PointOnE pt;
    pt.F = &F;
    for (long v : vals) pt.coords.push_back(F.from_int(v));
    return pt;
}

}  // namespace

TEST_CASE("e_generators") {
    auto gens = e_generators(4, 2, 2);
    CHECK(gens.size() == 2);
    CHECK(gens[0] == Perm::cycle(4, {0, 1}));
    CHECK(gens[1] == Perm::cycle(4, {2, 3}));
    CHECK(e_generators(6, 1, 3)[0] == Perm::cycle(6, {0, 1, 2}));
    CHECK_THROWS_AS(e_generators(5, 2, 3), std::invalid_argument);
}

TEST_CASE("trivial and sign modules") {
    RepE triv = specht_rep_ambient(Partition::make({4}), 2, 2);
    CHECK(triv.dim == 1);
    const FieldCtx& F = FieldCtx::get(2, 8);
    PointOnE pt = sample_point(F, 2, 42);
    CHECK(jordan_at_point(triv, pt).str() == "(1^1)");

    // (1^n): for odd p the p-cycles act by +1; for p=2 the sign is +1 in GF(2)
    RepE sign3 = specht_rep_straightened(Partition::make({1, 1, 1}), 3, 1);
    CHECK(sign3.dim == 1);
    CHECK(sign3.dense[0].at(0, 0) == FieldCtx::get(3, 1).one());
    RepE sign2 = specht_rep_straightened(Partition::make({1, 1, 1, 1}), 2, 2);
    CHECK(sign2.dense[0].at(0, 0) == FieldCtx::get(2, 1).one());
}

TEST_CASE("regular module is generically free") {
    for (int p : {2, 3}) {
        RepE reg = regular_rep(p, 2);
        CHECK(reg.dim == p * p);
        CHECK(is_generically_free(reg, 5, 8, 7));
        const FieldCtx& F = FieldCtx::get(p, 8);
        PointOnE pt = sample_point(F, 2, 3);
        JordanType jt = jordan_at_point(reg, pt);
        JordanType expect;
        expect.counts.assign(p, 0);
        expect.counts[p - 1] = p;
        CHECK(jt == expect);
    }
    CHECK_FALSE(is_generically_free(trivial_rep(2, 2), 5, 8, 7));
}

TEST_CASE("u_alpha matrix collapse") {
    RepE reg = regular_rep(3, 1);
    const FieldCtx& F = FieldCtx::get(3, 4);
    PointOnE one = manual_point(F, {1});
    MatrixF u = u_alpha_matrix(reg, one);  // alpha = (1) gives U = G_1
    MatrixF g(F, 3, 3);
    for (int j = 0; j < 3; ++j) g.at(reg.mono[0].perm[j], j) = F.one();
    CHECK(u == g);

    PointOnE zero = manual_point(F, {0});
    CHECK_THROWS_AS(u_alpha_matrix(reg, zero), std::invalid_argument);

    RepE triv = trivial_rep(3, 1);
    CHECK(u_alpha_matrix(triv, one) == MatrixF::identity(F, 1));
}

TEST_CASE("S^(2,1,1) at p=2, s=2 has jordan type (1,2)") {
    Partition mu = Partition::make({2, 1, 1});
    RepE rep = specht_rep_ambient(mu, 2, 2);
    CHECK(rep.dim == 3);
    const FieldCtx& F = FieldCtx::get(2, 16);
    for (uint64_t seed : {5u, 6u, 7u}) {
        PointOnE pt = sample_point(F, 2, seed);
        CHECK(jordan_at_point(rep, pt).str() == "(1^1,2^1)");
    }
}

TEST_CASE("signed permutation module basics") {
    // alpha=(n): trivial
    RepE triv = signed_perm_rep(Partition::make({4}), Partition(), 2, 2);
    CHECK(triv.dim == 1);
    // alpha=(), beta=(2): sign representation, g=(1 2) acts by -1 = +1 mod 2
    RepE sgn2 = signed_perm_rep(Partition(), Partition::make({2}), 2, 1);
    CHECK(sgn2.dim == 1);
    CHECK(sgn2.mono[0].perm[0] == 0);
    CHECK(sgn2.mono[0].sign[0] == 1);
    // odd p: a p-cycle is even, so the sign module is fixed with +1
    RepE sgn3 = signed_perm_rep(Partition(), Partition::make({3}), 3, 1);
    CHECK(sgn3.dim == 1);
    CHECK(sgn3.mono[0].sign[0] == 1);

    RepE m22 = signed_perm_rep(Partition::make({2}), Partition::make({2}), 2, 1);
    CHECK(m22.dim == 6);
}

TEST_CASE("M((2)|(2)) at p=2, s=1: jordan (1^2,2^2)") {
    RepE rep = signed_perm_rep(Partition::make({2}), Partition::make({2}), 2, 1);
    GenericTypeReport rpt = generic_jordan_type(rep, 10, 16, 99);
    CHECK(rpt.jordan.str() == "(1^2,2^2)");
    CHECK(rpt.stable.str() == "(1^2)");
    CHECK(rpt.attained_by_single_sample);
}

TEST_CASE("backend triangle on small hooks") {
    for (int p : {2, 3})
        for (int n = p; n <= 6; ++n) {
            if (n / p < 1) continue;
            for (const Partition& mu : hooks_of(n))
                for (int s = 1; s <= n / p; ++s) {
                    RepE amb = specht_rep_ambient(mu, p, s);
                    RepE str = specht_rep_straightened(mu, p, s);
                    RepE wdg = specht_rep_wedge(mu, p, s);
                    const FieldCtx& F = FieldCtx::get(p, 16);
                    for (uint64_t k = 1; k <= 3; ++k) {
                        PointOnE pt = sample_point(F, s, 1000 * n + 10 * s + k);
                        JordanType ja = jordan_at_point(amb, pt);
                        JordanType js = jordan_at_point(str, pt);
                        JordanType jw = jordan_at_point(wdg, pt);
                        CAPTURE(mu.str());
                        CHECK(ja == js);
                        CHECK(ja == jw);
                    }
                }
        }
}

TEST_CASE("direct sum adds jordan types at a common point") {
    RepE a = specht_rep_straightened(Partition::make({2, 1}), 3, 1);
    RepE b = specht_rep_straightened(Partition::make({1, 1, 1}), 3, 1);
    RepE sum = direct_sum(a, b);
    CHECK(sum.dim == a.dim + b.dim);
    const FieldCtx& F = FieldCtx::get(3, 16);
    PointOnE pt = sample_point(F, 1, 11);
    CHECK(jordan_at_point(sum, pt) == jordan_sum(jordan_at_point(a, pt), jordan_at_point(b, pt)));

    RepE zero = zero_rep(3, 1);
    RepE same = direct_sum(a, zero);
    CHECK(same.dim == a.dim);
    CHECK(jordan_at_point(same, pt) == jordan_at_point(a, pt));

    RepE other_p = specht_rep_straightened(Partition::make({2, 1}), 2, 1);
    CHECK_THROWS_AS(direct_sum(a, other_p), std::invalid_argument);
}

TEST_CASE("scaling invariance of the jordan type") {
    RepE rep = specht_rep_ambient(Partition::make({3, 1, 1}), 2, 2);
    const FieldCtx& F = FieldCtx::get(2, 16);
    SplitRng rng = SplitRng::keyed(5, 5);
    for (int t = 0; t < 4; ++t) {
        PointOnE pt = sample_point(F, 2, 100 + t);
        Fq lambda = F.random_nonzero(rng);
        PointOnE scaled = pt;
        for (auto& c : scaled.coords) c = F.mul(c, lambda);
        CHECK(jordan_at_point(rep, pt) == jordan_at_point(rep, scaled));
    }
}

TEST_CASE("generator contract holds for constructed reps") {
    // validate() is called by every constructor; exercise a mix of reps.
    CHECK_NOTHROW(specht_rep_ambient(Partition::make({2, 2, 1}), 2, 2));
    CHECK_NOTHROW(specht_rep_straightened(Partition::make({3, 2}), 3, 1));
    CHECK_NOTHROW(signed_perm_rep(Partition::make({2, 1}), Partition::make({2}), 3, 1));
    CHECK_NOTHROW(specht_rep_wedge(Partition::make({3, 1, 1}), 2, 2));
}

TEST_CASE("symbolic oracle agrees with sampling on tiny modules") {
    struct Case {
        RepE rep;
    };
    std::vector<RepE> reps;
    reps.push_back(specht_rep_ambient(Partition::make({2, 1, 1}), 2, 2));
    reps.push_back(specht_rep_straightened(Partition::make({2, 1}), 2, 1));
    reps.push_back(signed_perm_rep(Partition::make({2}), Partition::make({2}), 2, 1));
    reps.push_back(signed_perm_rep(Partition::make({2}), Partition::make({2}), 2, 2));
    reps.push_back(specht_rep_straightened(Partition::make({3, 1}), 2, 2));
    reps.push_back(specht_rep_straightened(Partition::make({2, 2, 1}), 5, 1));
    for (const RepE& rep : reps) {
        RankSequence sym = generic_rank_sequence_symbolic(rep);
        GenericTypeReport smp = generic_jordan_type(rep, 8, 16, 4242);
        CAPTURE(rep.label);
        CHECK(sym.r == smp.max_seq.r);
    }
}

TEST_CASE("ambient scale guard trips") {
    Caps caps;
    caps.ambient_cap = 10;
    CHECK_THROWS_AS(specht_rep_ambient(Partition::make({2, 2, 1}), 2, 2, caps), ScaleExceeded);
}
