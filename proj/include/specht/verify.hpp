#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/closed_forms.hpp"
#include "specht/reps.hpp"

namespace specht {

using Json = nlohmann::ordered_json;

enum class Tag {
    Thm32,
    Thm41,
    Cor42,
    Thm44,
    Prop21,
    Prop24iii,
    Lemma43ii,
    Complexity,
};

std::string tag_name(Tag t);
Tag tag_parse(const std::string& name);  // throws std::invalid_argument
std::vector<Tag> all_tags();

struct Sampling {
    int samples = 20;
    int ext = 16;
    uint64_t seed = 1;
};

struct CaseSpec {
    Tag tag = Tag::Thm44;
    int p = 2;
    Partition mu;             // Specht-type cases
    Partition alpha, beta;    // signed-module cases
    int s = 0;                // E_s index (0 when not applicable)
    Sampling sampling;
    std::string backend = "auto";
    bool perturb = false;  // harness self-test: break the prediction on purpose

    std::string id() const;
    uint64_t case_seed() const;  // derived from (sampling.seed, id)
};

struct CaseResult {
    CaseSpec spec;
    std::string predicted;
    std::string computed;
    std::string verdict;  // PASS | FAIL | SKIPPED-scale
    Json detail;
    long millis = 0;
};

struct VerifyConfig {
    std::vector<Tag> tags = all_tags();
    Sampling sampling;
    Caps caps;
    bool timing = false;
    bool perturb_selftest = false;  // appends one deliberately failing case

    // Grid bounds; defaults are the desk-scale sweeps.
    int hook_n_max = 9;
    int signed_n_max = 8;
    long signed_dim_max = 5000;
    int partitions_n_max = 8;
    int cor42_n_max = 40;
    std::vector<int> primes{2, 3};
};

// Merge settings from a JSON config file into defaults; throws on bad keys.
VerifyConfig config_from_json(const Json& j);
Json config_echo(const VerifyConfig& c);

std::vector<CaseSpec> build_cases(Tag tag, const VerifyConfig& c);

// Runs one case.  Throws HypothesisError when the parameters violate the
// hypotheses of the statement being tested; ScaleExceeded becomes a
// SKIPPED-scale verdict instead.
CaseResult run_case(const CaseSpec& spec, const Caps& caps);

struct VerifyReport {
    Json json;
    std::string summary;
    int exit_code = 0;
};

VerifyReport run_campaign(const VerifyConfig& c);

// Re-runs the cases stored in a previous report (or a single case object).
VerifyReport replay_witness(const Json& witness, const Caps& caps = {});

}  // namespace specht
