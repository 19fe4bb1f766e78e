#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specht/gf.hpp"

using namespace specht;

TEST_CASE("prime field basics") {
    const FieldCtx& F2 = FieldCtx::get(2, 1);
    CHECK(F2.add(F2.one(), F2.one()) == F2.zero());
    const FieldCtx& F3 = FieldCtx::get(3, 1);
    CHECK(F3.inv(F3.from_int(2)) == F3.from_int(2));
    CHECK_THROWS_AS(F3.inv(F3.zero()), std::domain_error);
}

TEST_CASE("GF(4) uses the lex-least modulus x^2+x+1") {
    const FieldCtx& F = FieldCtx::get(2, 2);
    CHECK(F.modulus() == std::vector<int>{1, 1, 1});
    Fq x;
    x.c[1] = 1;  // the class of x
    Fq xx = F.mul(x, x);
    Fq expect;  // x + 1
    expect.c[0] = 1;
    expect.c[1] = 1;
    CHECK(xx == expect);
}

TEST_CASE("field axioms on random triples") {
    for (auto [p, e] : {std::pair{2, 16}, std::pair{3, 16}, std::pair{5, 4}, std::pair{3, 1}}) {
        const FieldCtx& F = FieldCtx::get(p, e);
        SplitRng rng = SplitRng::keyed(7, p * 100 + e);
        for (int t = 0; t < 50; ++t) {
            Fq a = F.random(rng), b = F.random(rng), c = F.random(rng);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.sub(F.add(a, b), b) == a);
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
            // Frobenius is additive.
            BigInt pe(p);
            CHECK(F.pow(F.add(a, b), pe) == F.add(F.pow(a, pe), F.pow(b, pe)));
        }
    }
}

TEST_CASE("rank basics") {
    const FieldCtx& F = FieldCtx::get(3, 2);
    CHECK(rank(MatrixF::identity(F, 7)) == 7);
    CHECK(rank(MatrixF(F, 5, 4)) == 0);
}

TEST_CASE("rank invariant under invertible multiplication") {
    const FieldCtx& F = FieldCtx::get(2, 8);
    SplitRng rng = SplitRng::keyed(11, 0);
    for (int t = 0; t < 5; ++t) {
        MatrixF m = random_matrix(F, 6, 9, rng);
        int r = rank(m);
        MatrixF g = random_invertible(F, 6, rng);
        CHECK(rank(mat_mul(g, m)) == r);
        MatrixF h = random_invertible(F, 9, rng);
        CHECK(rank(mat_mul(m, h)) == r);
    }
}

TEST_CASE("jordan_from_ranks formula") {
    RankSequence rs;
    rs.r = {3, 1, 0};
    JordanType jt = jordan_from_ranks(rs);
    CHECK(jt.str() == "(1^1,2^1)");

    // free kC_p of rank k: r_i = (p-i)k
    for (int p : {2, 3, 5}) {
        int k = 4;
        RankSequence free;
        for (int i = 0; i <= p; ++i) free.r.push_back((p - i) * k);
        JordanType ft = jordan_from_ranks(free);
        JordanType expect;
        expect.counts.assign(p, 0);
        expect.counts[p - 1] = k;
        CHECK(ft == expect);
    }

    RankSequence bad;
    bad.r = {3, 0, 1};
    CHECK_THROWS_AS(jordan_from_ranks(bad), std::invalid_argument);
    RankSequence nonconvex;
    nonconvex.r = {4, 3, 0};  // drops 1 then 3
    CHECK_THROWS_AS(jordan_from_ranks(nonconvex), std::invalid_argument);
}

TEST_CASE("ranks (5,2,0) with p=2 give blocks (1,2,2)") {
    RankSequence rs;
    rs.r = {5, 2, 0};
    JordanType jt = jordan_from_ranks(rs);
    CHECK(jt.str() == "(1^1,2^2)");
    // cross-check against an explicit nilpotent with those blocks
    const FieldCtx& F = FieldCtx::get(2, 16);
    MatrixF n = nilpotent_from_type(F, jt);
    SplitRng rng = SplitRng::keyed(3, 0);
    MatrixF g = random_invertible(F, 5, rng);
    MatrixF conj = mat_mul(mat_mul(g, n), random_invertible(F, 5, rng));
    CHECK(rank(conj) == 2);
}

TEST_CASE("jordan round trip through conjugated nilpotents") {
    SplitRng rng = SplitRng::keyed(99, 1);
    for (int p : {2, 3, 5}) {
        const FieldCtx& F = FieldCtx::get(p, 4);
        for (int t = 0; t < 6; ++t) {
            JordanType jt;
            jt.counts.assign(p, 0);
            long long dim = 0;
            for (int j = 0; j < p; ++j) {
                jt.counts[j] = rng.below(3);
                dim += (j + 1) * jt.counts[j];
            }
            if (dim == 0 || dim > 30) continue;
            MatrixF n = nilpotent_from_type(F, jt);
            MatrixF g = random_invertible(F, static_cast<int>(dim), rng);
            MatrixF conj = mat_mul(mat_mul(g, n), mat_inverse(g));
            RankSequence rs = rank_sequence_of_nilpotent(conj, p);
            CHECK(jordan_from_ranks(rs) == jt.normalized());
        }
    }
}

TEST_CASE("dominance max") {
    RankSequence a{{4, 2, 0}}, b{{4, 1, 0}};
    auto [mx, attained] = dominance_max({a, b});
    CHECK(mx.r == std::vector<int>{4, 2, 0});
    CHECK(attained);

    auto [mx1, att1] = dominance_max({a});
    CHECK(mx1.r == a.r);
    CHECK(att1);

    RankSequence c{{4, 2, 1, 0}};
    CHECK_THROWS_AS(dominance_max(std::vector<RankSequence>{a, c}), std::invalid_argument);
}

TEST_CASE("field element wrapper") {
    const FieldCtx& F = FieldCtx::get(5, 2);
    FieldElement a = FieldElement::from_int(F, 3);
    FieldElement b = FieldElement::from_int(F, 4);
    CHECK((a * b).coefficients() == std::vector<int>{2, 0});
    CHECK((a - a).is_zero());
    CHECK((a * a.inverse()) == FieldElement::from_int(F, 1));
}
