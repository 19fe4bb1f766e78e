#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specht/common.hpp"
#include "specht/verify.hpp"

using namespace specht;

namespace {

CaseSpec thm44_case() {
    CaseSpec spec;
    spec.tag = Tag::Thm44;
    spec.p = 2;
    spec.mu = Partition::make({2, 1, 1});
    spec.s = 2;
    spec.sampling.seed = 42;
    spec.sampling.samples = 8;
    return spec;
}

VerifyConfig tiny_config() {
    VerifyConfig c;
    c.hook_n_max = 5;
    c.signed_n_max = 4;
    c.partitions_n_max = 5;
    c.cor42_n_max = 10;
    c.sampling.samples = 5;
    return c;
}

}  // namespace

TEST_CASE("run_case: thm4.4 pinned instance passes") {
    Caps caps;
    CaseResult r = run_case(thm44_case(), caps);
    CHECK(r.verdict == "PASS");
    CHECK(r.predicted == "(1^1)");
    CHECK(r.computed == "(1^1)");
}

TEST_CASE("run_case: thm3.2 pinned instance passes") {
    CaseSpec spec;
    spec.tag = Tag::Thm32;
    spec.p = 2;
    spec.alpha = Partition::make({2});
    spec.beta = Partition::make({2});
    spec.s = 1;
    spec.sampling.samples = 8;
    CaseResult r = run_case(spec, Caps{});
    CHECK(r.verdict == "PASS");
    CHECK(r.computed == "(1^2)");
}

TEST_CASE("run_case: hypothesis violations are typed errors") {
    CaseSpec spec;
    spec.tag = Tag::Thm41;
    spec.p = 2;
    spec.mu = Partition::make({2, 1, 1});  // n = 4, r = 0
    spec.s = 1;
    CHECK_THROWS_AS(run_case(spec, Caps{}), HypothesisError);

    CaseSpec bad44 = thm44_case();
    bad44.mu = Partition::make({3, 1, 1});  // n = 5, odd
    bad44.s = 2;
    CHECK_THROWS_AS(run_case(bad44, Caps{}), HypothesisError);
}

TEST_CASE("run_case: scale guard becomes SKIPPED-scale") {
    CaseSpec spec = thm44_case();
    Caps caps;
    caps.ambient_cap = 2;
    caps.specht_cap = 1;
    CaseResult r = run_case(spec, caps);
    CHECK(r.verdict == "SKIPPED-scale");
}

TEST_CASE("perturbed cases fail") {
    CaseSpec spec = thm44_case();
    spec.perturb = true;
    CaseResult r = run_case(spec, Caps{});
    CHECK(r.verdict == "FAIL");
}

TEST_CASE("empty campaign reports cleanly") {
    VerifyConfig c = tiny_config();
    c.tags.clear();
    VerifyReport rep = run_campaign(c);
    CHECK(rep.exit_code == 0);
    CHECK(rep.json["summary"]["total"] == 0);
}

TEST_CASE("campaign with a forced mismatch exits 1") {
    VerifyConfig c = tiny_config();
    c.tags = {Tag::Thm44};
    c.hook_n_max = 4;
    c.perturb_selftest = true;
    VerifyReport rep = run_campaign(c);
    CHECK(rep.exit_code == 1);
    CHECK(rep.json["summary"]["fail"] == 1);
}

TEST_CASE("reports are byte identical across runs") {
    VerifyConfig c = tiny_config();
    c.tags = {Tag::Thm44, Tag::Complexity};
    VerifyReport a = run_campaign(c);
    VerifyReport b = run_campaign(c);
    CHECK(a.json.dump(2) == b.json.dump(2));
    CHECK(a.exit_code == 0);
}

TEST_CASE("different seeds change sample keys but not verdicts") {
    VerifyConfig c = tiny_config();
    c.tags = {Tag::Thm44};
    VerifyReport a = run_campaign(c);
    c.sampling.seed = 777;
    VerifyReport b = run_campaign(c);
    CHECK(a.json.dump() != b.json.dump());
    CHECK(b.exit_code == 0);
}

TEST_CASE("replay reruns recorded cases") {
    VerifyConfig c = tiny_config();
    c.tags = {Tag::Thm44};
    VerifyReport rep = run_campaign(c);
    VerifyReport again = replay_witness(rep.json);
    CHECK(again.exit_code == 0);
    CHECK(again.json["summary"]["total"] == rep.json["summary"]["total"]);

    // single-case witness
    VerifyReport one = replay_witness(rep.json["cases"][0]);
    CHECK(one.exit_code == 0);
    CHECK(one.json["summary"]["total"] == 1);
}

TEST_CASE("config parsing") {
    Json j;
    j["tags"] = Json::array({"thm4.4"});
    j["samples"] = 3;
    j["primes"] = Json::array({2});
    VerifyConfig c = config_from_json(j);
    CHECK(c.tags.size() == 1);
    CHECK(c.sampling.samples == 3);
    CHECK(c.primes == std::vector<int>{2});

    Json bad;
    bad["nonsense"] = 1;
    CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(tag_parse("thm9.9"), std::invalid_argument);
}

TEST_CASE("all default campaigns build nonempty grids") {
    VerifyConfig c = tiny_config();
    for (Tag t : all_tags()) {
        auto cases = build_cases(t, c);
        CAPTURE(tag_name(t));
        CHECK(!cases.empty());
    }
}
