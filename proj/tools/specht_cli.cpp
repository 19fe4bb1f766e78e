#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "specht/closed_forms.hpp"
#include "specht/common.hpp"
#include "specht/partition.hpp"
#include "specht/reps.hpp"
#include "specht/verify.hpp"

namespace {

using namespace specht;

int cmd_core(const std::string& mu_text, int p) {
    Partition mu = Partition::parse(mu_text);
    CoreWeight cw = p_core_weight(mu, p);
    std::cout << "partition=" << mu.str() << " p=" << p << " core=" << cw.core.str()
              << " weight=" << cw.weight << "\n";
    return 0;
}

int cmd_dim(const std::string& mu_text) {
    Partition mu = Partition::parse(mu_text);
    std::cout << "partition=" << mu.str() << " dim=" << specht_dimension(mu).get_str() << "\n";
    return 0;
}

struct JordanArgs {
    std::string module = "specht";
    std::string mu, alpha = "-", beta = "-";
    int p = 2;
    int s = 1;
    int samples = 20;
    int ext = 16;
    uint64_t seed = 1;
    std::string backend = "auto";
};

int cmd_jordan(const JordanArgs& args) {
    Caps caps;
    RepE rep;
    if (args.module == "specht") {
        rep = specht_rep(Partition::parse(args.mu), args.p, args.s, args.backend, caps);
    } else if (args.module == "signed") {
        rep = signed_perm_rep(Partition::parse(args.alpha), Partition::parse(args.beta), args.p,
                              args.s, caps);
    } else {
        throw CLI::ValidationError("--module must be specht or signed");
    }
    GenericTypeReport rpt = generic_jordan_type(rep, args.samples, args.ext, args.seed);
    std::cout << "module=" << rep.label << " dim=" << rep.dim << " p=" << args.p
              << " s=" << args.s << "\n";
    std::cout << "jordan=" << rpt.jordan.str() << " stable=" << rpt.stable.str() << "\n";
    std::cout << "samples=" << rpt.samples << " ext=" << args.ext
              << " attained_by_single_sample=" << (rpt.attained_by_single_sample ? "yes" : "no")
              << "\n";
    std::cout << "max_ranks=";
    for (size_t i = 0; i < rpt.max_seq.r.size(); ++i)
        std::cout << (i ? "," : "") << rpt.max_seq.r[i];
    std::cout << "\n";
    return 0;
}

struct VerifyArgs {
    std::string tag = "all";
    std::string config_path;
    std::string json_path;
    bool timing = false;
    bool perturb_selftest = false;
    int samples = -1;
    int ext = -1;
    long seed = -1;
    long ambient_cap = -1;
    long specht_cap = -1;
};

int cmd_verify(const VerifyArgs& args) {
    VerifyConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + args.config_path + "'");
        Json j = Json::parse(in);
        config = config_from_json(j);
    }
    if (args.tag != "all") config.tags = {tag_parse(args.tag)};
    if (args.samples >= 0) config.sampling.samples = args.samples;
    if (args.ext >= 0) config.sampling.ext = args.ext;
    if (args.seed >= 0) config.sampling.seed = static_cast<uint64_t>(args.seed);
    if (args.ambient_cap >= 0) config.caps.ambient_cap = args.ambient_cap;
    if (args.specht_cap >= 0) config.caps.specht_cap = args.specht_cap;
    if (args.timing) config.timing = true;
    if (args.perturb_selftest) config.perturb_selftest = true;

    VerifyReport report = run_campaign(config);
    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path, std::ios::binary);
        out << report.json.dump(2) << "\n";
    }
    std::cout << report.summary;
    return report.exit_code;
}

int cmd_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open witness file '" + path + "'");
    Json j = Json::parse(in);
    VerifyReport report = replay_witness(j);
    std::cout << report.summary;
    for (const auto& cj : report.json["cases"])
        std::cout << cj["id"].get<std::string>() << ": " << cj["verdict"].get<std::string>()
                  << "\n";
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Specht/signed-permutation module computations over GF(p^e)"};
    app.require_subcommand(1);

    std::string mu_text;
    int core_p = 2;
    auto* core = app.add_subcommand("core", "p-core and p-weight of a partition");
    core->add_option("MU", mu_text, "partition, e.g. 5,1,1 (empty: -)")->required();
    core->add_option("-p", core_p, "prime")->required();

    std::string dim_mu;
    auto* dim = app.add_subcommand("dim", "number of standard tableaux");
    dim->add_option("MU", dim_mu, "partition")->required();

    JordanArgs jargs;
    auto* jordan = app.add_subcommand("jordan", "sampled generic Jordan type of a module");
    jordan->add_option("--module", jargs.module, "specht|signed")->required();
    jordan->add_option("--mu", jargs.mu, "hook or partition (specht)");
    jordan->add_option("--alpha", jargs.alpha, "alpha partition (signed)");
    jordan->add_option("--beta", jargs.beta, "beta partition (signed)");
    jordan->add_option("-p", jargs.p, "prime")->required();
    jordan->add_option("-s", jargs.s, "number of E_s generators")->required();
    jordan->add_option("--samples", jargs.samples, "sample count");
    jordan->add_option("--ext", jargs.ext, "extension degree e");
    jordan->add_option("--seed", jargs.seed, "RNG seed");
    jordan->add_option("--backend", jargs.backend, "ambient|straight|wedge|auto");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("TAG", vargs.tag,
                       "thm3.2|thm4.1|cor4.2|thm4.4|prop2.1|prop2.4iii|lemma4.3ii|complexity|all");
    verify->add_option("--config", vargs.config_path, "JSON config file");
    verify->add_option("--json", vargs.json_path, "write the JSON report here");
    verify->add_flag("--timing", vargs.timing, "include per-case wall time in the JSON report");
    verify->add_flag("--perturb-selftest", vargs.perturb_selftest,
                     "append one deliberately failing case (harness self-test)");
    verify->add_option("--samples", vargs.samples, "override sample count");
    verify->add_option("--ext", vargs.ext, "override extension degree");
    verify->add_option("--seed", vargs.seed, "override master seed");
    verify->add_option("--ambient-cap", vargs.ambient_cap, "tabloid-space cap");
    verify->add_option("--specht-cap", vargs.specht_cap, "standard-basis cap");

    std::string witness_path;
    auto* replay = app.add_subcommand("replay", "re-run cases from a report/witness file");
    replay->add_option("WITNESS", witness_path, "JSON report or single case")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (core->parsed()) return cmd_core(mu_text, core_p);
        if (dim->parsed()) return cmd_dim(dim_mu);
        if (jordan->parsed()) return cmd_jordan(jargs);
        if (verify->parsed()) return cmd_verify(vargs);
        if (replay->parsed()) return cmd_replay(witness_path);
    } catch (const specht::HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const specht::ScaleExceeded& e) {
        std::cerr << "scale exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
