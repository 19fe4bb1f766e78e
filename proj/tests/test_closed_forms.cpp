#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "specht/closed_forms.hpp"
#include "specht/common.hpp"

using namespace specht;

TEST_CASE("lambda sets") {
    auto l1 = lambda_set({1, 1}, 1);
    std::set<std::vector<int>> s1(l1.begin(), l1.end());
    CHECK(s1 == std::set<std::vector<int>>{{1, 0}, {0, 1}});

    auto l2 = lambda_set({2, 0, 1}, 2);
    std::set<std::vector<int>> s2(l2.begin(), l2.end());
    CHECK(s2 == std::set<std::vector<int>>{{2, 0, 0}, {1, 0, 1}});

    CHECK(lambda_set({1, 1}, 3).empty());
    CHECK(lambda_set({1, 1}, -1).empty());
    CHECK(lambda_set({}, 0).size() == 1);
}

TEST_CASE("n_signed pinned values") {
    SignedShape sh = SignedShape::of(Partition::make({2}), Partition::make({2}), 2);
    CHECK(sh.d == 2);
    CHECK(sh.r == 0);
    CHECK(sh.c == 0);
    CHECK(n_signed(sh, 1) == 2);

    SignedShape sh2 = SignedShape::of(Partition::make({4}), Partition(), 2);
    CHECK(n_signed(sh2, 1) == 1);

    // s > d - c gives the empty sum
    SignedShape sh3 = SignedShape::of(Partition::make({1}), Partition::make({1}), 2);
    CHECK(sh3.d == 1);
    CHECK(sh3.c == 1);
    CHECK(n_signed(sh3, 1) == 0);
    CHECK_THROWS_AS(n_signed(sh3, 5), HypothesisError);
}

TEST_CASE("n_signed equals the fixed tabloid count, n <= 6") {
    for (int p : {2, 3})
        for (int n = 2; n <= 6; ++n) {
            int d = n / p;
            if (d < 1) continue;
            for (int a = 0; a <= n; ++a)
                for (const Partition& alpha : partitions_of(a))
                    for (const Partition& beta : partitions_of(n - a)) {
                        SignedShape sh = SignedShape::of(alpha, beta, p);
                        for (int s = 1; s <= d; ++s) {
                            CAPTURE(sh.str());
                            CHECK(n_signed(sh, s) == fixed_tabloid_count(sh.shape(), p, s));
                        }
                    }
        }
}

TEST_CASE("n_hook pinned values") {
    HookData h = HookData::of(Partition::make({5, 1, 1}), 3);
    CHECK(n_hook(h, 1) == 3);

    // b = 0 gives 1 for every s
    HookData h2 = HookData::of(Partition::make({7}), 3);
    CHECK(n_hook(h2, 1) == 1);
    CHECK(n_hook(h2, 2) == 1);

    HookData h3 = HookData::of(Partition::make({2, 1, 1}), 3);
    CHECK(n_hook(h3, 1) == 0);

    HookData h4 = HookData::of(Partition::make({2, 1, 1}), 2);
    CHECK_THROWS_AS(n_hook(h4, 1), HypothesisError);  // r = 0 regime
    CHECK_THROWS_AS(n_hook(h, 3), HypothesisError);   // s > d
}

TEST_CASE("corollary values pinned") {
    auto cv = corollary_values(HookData::of(Partition::make({5, 1, 1}), 3));
    CHECK(cv.tag == "i");
    CHECK(cv.value == 3);
    CHECK(cv.complexity == 1);

    auto cv2 = corollary_values(HookData::of(Partition::make({2, 1, 1}), 3));
    CHECK(cv2.tag == "i");
    CHECK(cv2.value == 3);
    CHECK(cv2.complexity == 0);
    CHECK(cv2.s_eval == 0);

    auto cv3 = corollary_values(HookData::of(Partition::make({4, 1}), 3));
    CHECK(cv3.tag == "ii");
    CHECK(cv3.value == 1);
    CHECK(cv3.complexity == 1);
}

TEST_CASE("corollary closed forms equal n_hook, n <= 40") {
    for (int p : {2, 3})
        for (int n = 1; n <= 40; ++n) {
            if (n % p == 0 || n / p < 1) continue;
            for (const Partition& mu : hooks_of(n)) {
                HookData h = HookData::of(mu, p);
                auto cv = corollary_values(h);
                CAPTURE(mu.str());
                CAPTURE(p);
                CHECK(cv.value == n_hook(h, cv.s_eval));
            }
        }
}

TEST_CASE("filtration identity: signed count splits into adjacent hooks, n <= 40") {
    // For p not dividing a+b: N((a-1),(b+1),s) = N((a,1^b);s) + N((a-1,1^(b+1));s).
    for (int p : {2, 3})
        for (int n = 2; n <= 40; ++n) {
            if (n % p == 0 || n / p < 1) continue;
            for (int a = 2; a <= n - 1; ++a) {
                int b = n - a;
                SignedShape sh = SignedShape::of(Partition::make({a - 1}), Partition::make({b + 1}), p);
                std::vector<int> hook1{a};
                hook1.insert(hook1.end(), b, 1);
                std::vector<int> hook2{a - 1};
                hook2.insert(hook2.end(), b + 1, 1);
                HookData h1 = HookData::of(Partition::make(hook1), p);
                HookData h2 = HookData::of(Partition::make(hook2), p);
                for (int s = 1; s <= n / p; ++s) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(n_signed(sh, s) == n_hook(h1, s) + n_hook(h2, s));
                }
            }
        }
}

TEST_CASE("binomial telescoping used in the parity argument") {
    for (int d = 1; d <= 40; ++d)
        for (int sigma = 0; sigma <= d; ++sigma)
            CHECK(binomial(d, sigma + 1) - binomial(d - 1, sigma) == binomial(d - 1, sigma + 1));
}

TEST_CASE("thm44 predictions pinned") {
    auto pr = thm44_prediction(HookData::of(Partition::make({2, 1, 1}), 2));
    CHECK(pr.stable.str() == "(1^1)");
    CHECK(pr.complexity == 2);

    auto pr2 = thm44_prediction(HookData::of(Partition::make({3, 1, 1, 1}), 3));
    CHECK(pr2.stable.str() == "(1^1)");

    auto pr3 = thm44_prediction(HookData::of(Partition::make({2, 1, 1, 1, 1}), 3));
    CHECK(pr3.stable.str() == "(2^1)");

    CHECK_THROWS_AS(thm44_prediction(HookData::of(Partition::make({5, 1, 1}), 3)), HypothesisError);
}

TEST_CASE("predicted complexity") {
    CHECK(predicted_complexity_hook(Partition::make({7, 1, 1, 1}), 3) == 3);
    CHECK(predicted_complexity_hook(Partition::make({2, 1, 1}), 3) == 0);
    SignedShape sh = SignedShape::of(Partition::make({2}), Partition::make({2}), 2);
    CHECK(predicted_complexity_signed(sh) == 2);
    CHECK_THROWS_AS(predicted_complexity_hook(Partition::make({2, 2}), 2), std::invalid_argument);
}

TEST_CASE("prop 2.4(iii) criterion") {
    CHECK(prop24iii_criterion(Partition::make({3, 2, 1}), 2));
    CHECK_FALSE(prop24iii_criterion(Partition::make({2, 1, 1}), 2));
    CHECK_FALSE(prop24iii_criterion(Partition::make({1}), 2));
}

TEST_CASE("n_signed at s = 0 is the module dimension") {
    SignedShape sh = SignedShape::of(Partition::make({2, 1}), Partition::make({2}), 2);
    CHECK(n_signed(sh, 0) == multinomial({2, 1, 2}));
}
