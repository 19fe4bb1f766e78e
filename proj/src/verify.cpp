#include "specht/verify.hpp"

#include <array>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "specht/common.hpp"

namespace specht {

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::Thm32: return "thm3.2";
        case Tag::Thm41: return "thm4.1";
        case Tag::Cor42: return "cor4.2";
        case Tag::Thm44: return "thm4.4";
        case Tag::Prop21: return "prop2.1";
        case Tag::Prop24iii: return "prop2.4iii";
        case Tag::Lemma43ii: return "lemma4.3ii";
        case Tag::Complexity: return "complexity";
    }
    throw std::logic_error("tag_name: bad tag");
}

Tag tag_parse(const std::string& name) {
    for (Tag t : all_tags())
        if (tag_name(t) == name) return t;
    throw std::invalid_argument("unknown campaign tag '" + name + "'");
}

std::vector<Tag> all_tags() {
    return {Tag::Thm32,  Tag::Thm41,     Tag::Cor42,     Tag::Thm44,
            Tag::Prop21, Tag::Prop24iii, Tag::Lemma43ii, Tag::Complexity};
}

std::string CaseSpec::id() const {
    std::string out = tag_name(tag) + "|p=" + std::to_string(p);
    if (tag == Tag::Thm32)
        out += "|alpha=" + alpha.str() + "|beta=" + beta.str();
    else
        out += "|mu=" + mu.str();
    if (s > 0) out += "|s=" + std::to_string(s);
    if (perturb) out += "|perturb";
    return out;
}

uint64_t CaseSpec::case_seed() const { return SplitRng::mix(sampling.seed ^ fnv1a(id())); }

namespace {

JordanType single_size_type(int p, int size, long long mult) {
    JordanType jt;
    jt.counts.assign(p, 0);
    if (mult) jt.counts[size - 1] = mult;
    return jt.normalized();
}

Json ranks_json(const RankSequence& rs) {
    Json a = Json::array();
    for (int v : rs.r) a.push_back(v);
    return a;
}

Json seeds_json(const std::vector<uint64_t>& seeds) {
    Json a = Json::array();
    for (uint64_t s : seeds) a.push_back(s);
    return a;
}

void fill_sampling_detail(Json& detail, const GenericTypeReport& rpt, bool failed) {
    detail["jordan"] = rpt.jordan.str();
    detail["stable"] = rpt.stable.str();
    detail["attained_by_single_sample"] = rpt.attained_by_single_sample;
    detail["max_ranks"] = ranks_json(rpt.max_seq);
    detail["sample_seeds"] = seeds_json(rpt.seeds);
    if (failed) {
        Json all = Json::array();
        for (const auto& rs : rpt.sample_seqs) all.push_back(ranks_json(rs));
        detail["sample_ranks"] = all;
    }
}

GenericTypeReport sample_rep(const RepE& rep, const Sampling& sampling, uint64_t seed) {
    return generic_jordan_type(rep, sampling.samples, sampling.ext, seed);
}

CaseResult result_shell(const CaseSpec& spec) {
    CaseResult r;
    r.spec = spec;
    r.detail = Json::object();
    return r;
}

void run_thm32(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    SignedShape sh = SignedShape::of(spec.alpha, spec.beta, spec.p);
    if (sh.d < 1 || spec.s < 1 || spec.s > sh.d)
        throw HypothesisError(spec.id() + ": requires 1 <= s <= d");
    BigInt n_val = n_signed(sh, spec.s);
    JordanType predicted = single_size_type(spec.p, 1, n_val.get_si());
    if (spec.perturb) predicted = single_size_type(spec.p, 1, n_val.get_si() + 1);
    out.predicted = predicted.str();

    RepE rep = signed_perm_rep(spec.alpha, spec.beta, spec.p, spec.s, caps);
    GenericTypeReport rpt = sample_rep(rep, spec.sampling, spec.case_seed());
    BigInt oracle = fixed_tabloid_count(sh.shape(), spec.p, spec.s, caps.ambient_cap);

    out.computed = rpt.stable.str();
    bool pass = rpt.stable == predicted && oracle == n_val;
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["dim"] = rep.dim;
    out.detail["n_formula"] = n_val.get_str();
    out.detail["fixed_tabloid_oracle"] = oracle.get_str();
    fill_sampling_detail(out.detail, rpt, !pass);
}

void run_thm41(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    HookData h = HookData::of(spec.mu, spec.p);
    if (h.r == 0) throw HypothesisError(spec.id() + ": requires p not dividing n");
    if (h.d < 1 || spec.s < 1 || spec.s > h.d)
        throw HypothesisError(spec.id() + ": requires 1 <= s <= d");
    BigInt n_val = n_hook(h, spec.s);
    JordanType predicted = single_size_type(spec.p, 1, n_val.get_si() + (spec.perturb ? 1 : 0));
    out.predicted = predicted.str();

    RepE rep = specht_rep(spec.mu, spec.p, spec.s, spec.backend, caps);
    GenericTypeReport rpt = sample_rep(rep, spec.sampling, spec.case_seed());
    out.computed = rpt.stable.str();
    bool pass = rpt.stable == predicted;
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["dim"] = rep.dim;
    out.detail["n_formula"] = n_val.get_str();
    fill_sampling_detail(out.detail, rpt, !pass);
}

void run_cor42(const CaseSpec& spec, CaseResult& out) {
    HookData h = HookData::of(spec.mu, spec.p);
    CorollaryValue cv = corollary_values(h);  // validates d >= 1, r >= 1
    BigInt lhs = cv.value + (spec.perturb ? 1 : 0);
    BigInt rhs = n_hook(h, cv.s_eval);
    out.predicted = lhs.get_str();
    out.computed = rhs.get_str();
    out.verdict = lhs == rhs ? "PASS" : "FAIL";
    out.detail["case"] = cv.tag;
    out.detail["s_eval"] = cv.s_eval;
    out.detail["complexity"] = cv.complexity;
}

void run_thm44(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    HookData h = HookData::of(spec.mu, spec.p);
    if (h.r != 0) throw HypothesisError(spec.id() + ": requires p | n");
    if (h.d < 1) throw HypothesisError(spec.id() + ": requires d >= 1");
    if (spec.s != h.d) throw HypothesisError(spec.id() + ": restriction must be to E_d");
    Prediction pred = thm44_prediction(h);
    JordanType predicted = pred.stable;
    if (spec.perturb) {
        predicted.counts.assign(spec.p - 1, 0);
        predicted.counts[0] = pred.stable.normalized().counts.empty()
                                  ? 1
                                  : pred.stable.counts[0] + 1;
        predicted = predicted.normalized();
    }
    out.predicted = predicted.str();

    RepE rep = specht_rep(spec.mu, spec.p, h.d, spec.backend, caps);
    GenericTypeReport rpt = sample_rep(rep, spec.sampling, spec.case_seed());
    out.computed = rpt.stable.str();
    bool pass = rpt.stable == predicted;
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["dim"] = rep.dim;
    out.detail["b0_parity"] = h.b0 % 2 == 0 ? "even" : "odd";
    fill_sampling_detail(out.detail, rpt, !pass);
}

void run_prop21(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    HookData h = HookData::of(spec.mu, spec.p);
    if (h.r == 0) throw HypothesisError(spec.id() + ": requires p not dividing n");
    if (h.b < 1) throw HypothesisError(spec.id() + ": requires b >= 1");
    if (h.d < 1 || spec.s < 1 || spec.s > h.d)
        throw HypothesisError(spec.id() + ": requires 1 <= s <= d");

    std::vector<int> other{h.a + 1};
    other.insert(other.end(), h.b - 1, 1);
    Partition mu2 = Partition::make(std::move(other));

    uint64_t cs = spec.case_seed();
    RepE s1 = specht_rep_straightened(spec.mu, spec.p, spec.s, caps);
    RepE s2 = specht_rep_straightened(mu2, spec.p, spec.s, caps);
    RepE m = signed_perm_rep(Partition::make({h.a}), Partition::make({h.b}), spec.p, spec.s, caps);
    GenericTypeReport t1 = sample_rep(s1, spec.sampling, SplitRng::mix(cs ^ 1));
    GenericTypeReport t2 = sample_rep(s2, spec.sampling, SplitRng::mix(cs ^ 2));
    GenericTypeReport tm = sample_rep(m, spec.sampling, SplitRng::mix(cs ^ 3));
    GenericTypeReport ts = sample_rep(direct_sum(s1, s2), spec.sampling, SplitRng::mix(cs ^ 4));

    JordanType expected = jordan_sum(t1.jordan, t2.jordan);
    if (spec.perturb) expected = jordan_sum(expected, single_size_type(spec.p, 1, 1));
    out.predicted = expected.str();
    out.computed = tm.jordan.str();
    bool pass = tm.jordan == expected && ts.jordan == expected;
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["summand_types"] = Json::array({t1.jordan.str(), t2.jordan.str()});
    out.detail["module"] = m.label;
    out.detail["direct_sum_type"] = ts.jordan.str();
    out.detail["module_dim"] = m.dim;
    out.detail["sample_seeds"] =
        seeds_json({SplitRng::mix(cs ^ 1), SplitRng::mix(cs ^ 2), SplitRng::mix(cs ^ 3),
                    SplitRng::mix(cs ^ 4)});
}

void run_prop24iii(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    if (!prop24iii_criterion(spec.mu, spec.p))
        throw HypothesisError(spec.id() + ": requires |core| > r");
    int d = spec.mu.n() / spec.p;
    if (d < 1) throw HypothesisError(spec.id() + ": requires d >= 1");
    RepE rep = specht_rep(spec.mu, spec.p, d, spec.backend, caps);
    GenericTypeReport rpt = sample_rep(rep, spec.sampling, spec.case_seed());
    out.predicted = "()";
    out.computed = rpt.stable.str();
    bool pass = rpt.stable.is_empty();
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["dim"] = rep.dim;
    out.detail["core"] = p_core_weight(spec.mu, spec.p).core.str();
    fill_sampling_detail(out.detail, rpt, !pass);
}

void run_lemma43ii(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    HookData::of(spec.mu, spec.p);  // hook check
    const int smax = spec.mu.n() / spec.p;
    if (smax < 2) throw HypothesisError(spec.id() + ": requires floor(n/p) >= 2");
    RepE rep = specht_rep_straightened(spec.mu, spec.p, smax, caps);
    std::vector<Tableau> basis = enumerate_standard(spec.mu, caps.specht_cap);
    const FieldCtx& F = FieldCtx::get(spec.p, 1);

    bool pass = true;
    std::string why;
    for (int i = 2; i <= smax && pass; ++i) {
        const MatrixF& g = rep.dense[i - 1];
        for (int c = 0; c < rep.dim && pass; ++c) {
            int nonzero_row = -1;
            int nonzero_count = 0;
            for (int r = 0; r < rep.dim; ++r) {
                if (!F.is_zero(g.at(r, c))) {
                    ++nonzero_count;
                    nonzero_row = r;
                }
            }
            int entry = nonzero_count == 1 ? g.at(nonzero_row, c).c[0] : -1;
            bool monomial = nonzero_count == 1 && (entry == 1 || entry == spec.p - 1);
            const Tableau& t = basis[c];
            std::set<int> first_row, first_col;
            for (int j = 0; j < t.row_len(0); ++j) first_row.insert(t.at(0, j));
            for (int r = 0; r < t.col_height(0); ++r) first_col.insert(t.at(r, 0));
            bool row_ok = true, col_ok = true;
            for (int v = (i - 1) * spec.p + 1; v <= i * spec.p; ++v) {
                if (!first_row.count(v)) row_ok = false;
                if (!first_col.count(v)) col_ok = false;
            }
            bool contained = row_ok || col_ok;
            bool fixed = nonzero_count == 1 && nonzero_row == c;
            if (!monomial) {
                pass = false;
                why = "column " + std::to_string(c) + " of G_" + std::to_string(i) + " not monomial";
            } else if (fixed != contained) {
                pass = false;
                why = "fixed-vector criterion failed at column " + std::to_string(c) + " of G_" +
                      std::to_string(i);
            } else if (fixed && entry != 1) {
                pass = false;
                why = "fixed column " + std::to_string(c) + " of G_" + std::to_string(i) +
                      " has entry != +1";
            }
        }
    }
    if (spec.perturb) pass = !pass;
    out.predicted = "monomial with fixed-vector criterion";
    out.computed = pass ? "holds" : why;
    out.verdict = pass ? "PASS" : "FAIL";
    out.detail["s_max"] = smax;
    out.detail["dim"] = rep.dim;
}

void run_complexity(const CaseSpec& spec, const Caps& caps, CaseResult& out) {
    if (!spec.mu.is_hook()) throw HypothesisError(spec.id() + ": requires a hook partition");
    int w = predicted_complexity_hook(spec.mu, spec.p);
    out.detail["weight"] = w;
    out.detail["upper_bound"] = w;  // p-rank of a defect group; cited, not computed
    out.predicted = "complexity=" + std::to_string(w);
    if (w == 0) {
        out.computed = "weight 0";
        out.verdict = spec.perturb ? "FAIL" : "PASS";
        out.detail["confirmed"] = !spec.perturb;
        return;
    }
    RepE rep = specht_rep(spec.mu, spec.p, w, spec.backend, caps);
    GenericTypeReport rpt = sample_rep(rep, spec.sampling, spec.case_seed());
    bool witness = !rpt.stable.is_empty();
    if (spec.perturb) witness = !witness;
    out.computed = "stable " + rpt.stable.str() + " at E_" + std::to_string(w);
    out.verdict = witness ? "PASS" : "FAIL";
    out.detail["confirmed"] = witness;
    fill_sampling_detail(out.detail, rpt, !witness);
}

}  // namespace

CaseResult run_case(const CaseSpec& spec, const Caps& caps) {
    CaseResult out = result_shell(spec);
    auto t0 = std::chrono::steady_clock::now();
    try {
        switch (spec.tag) {
            case Tag::Thm32: run_thm32(spec, caps, out); break;
            case Tag::Thm41: run_thm41(spec, caps, out); break;
            case Tag::Cor42: run_cor42(spec, out); break;
            case Tag::Thm44: run_thm44(spec, caps, out); break;
            case Tag::Prop21: run_prop21(spec, caps, out); break;
            case Tag::Prop24iii: run_prop24iii(spec, caps, out); break;
            case Tag::Lemma43ii: run_lemma43ii(spec, caps, out); break;
            case Tag::Complexity: run_complexity(spec, caps, out); break;
        }
    } catch (const ScaleExceeded& e) {
        out.verdict = "SKIPPED-scale";
        out.detail["reason"] = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    out.millis =
        static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return out;
}

std::vector<CaseSpec> build_cases(Tag tag, const VerifyConfig& c) {
    std::vector<CaseSpec> out;
    auto base = [&](int p) {
        CaseSpec spec;
        spec.tag = tag;
        spec.p = p;
        spec.sampling = c.sampling;
        return spec;
    };
    switch (tag) {
        case Tag::Thm32: {
            for (int p : c.primes)
                for (int n = 2; n <= c.signed_n_max; ++n) {
                    int d = n / p;
                    if (d < 1) continue;
                    for (int a = 0; a <= n; ++a)
                        for (const Partition& alpha : partitions_of(a))
                            for (const Partition& beta : partitions_of(n - a)) {
                                Composition shape(alpha.parts().begin(), alpha.parts().end());
                                shape.insert(shape.end(), beta.parts().begin(), beta.parts().end());
                                if (multinomial(shape) > c.signed_dim_max) continue;
                                for (int s = 1; s <= d; ++s) {
                                    CaseSpec spec = base(p);
                                    spec.alpha = alpha;
                                    spec.beta = beta;
                                    spec.s = s;
                                    out.push_back(spec);
                                }
                            }
                }
            break;
        }
        case Tag::Thm41: {
            for (int p : c.primes)
                for (int n = 1; n <= c.hook_n_max; ++n) {
                    if (n % p == 0 || n / p < 1) continue;
                    for (const Partition& mu : hooks_of(n))
                        for (int s = 1; s <= n / p; ++s) {
                            CaseSpec spec = base(p);
                            spec.mu = mu;
                            spec.s = s;
                            out.push_back(spec);
                        }
                }
            break;
        }
        case Tag::Cor42: {
            for (int p : c.primes)
                for (int n = 1; n <= c.cor42_n_max; ++n) {
                    if (n % p == 0 || n / p < 1) continue;
                    for (const Partition& mu : hooks_of(n)) {
                        CaseSpec spec = base(p);
                        spec.mu = mu;
                        out.push_back(spec);
                    }
                }
            break;
        }
        case Tag::Thm44: {
            for (int p : c.primes)
                for (int n = p; n <= c.hook_n_max; n += p)
                    for (const Partition& mu : hooks_of(n)) {
                        CaseSpec spec = base(p);
                        spec.mu = mu;
                        spec.s = n / p;
                        out.push_back(spec);
                    }
            break;
        }
        case Tag::Prop21: {
            for (int p : c.primes)
                for (int n = 2; n <= c.signed_n_max; ++n) {
                    if (n % p == 0 || n / p < 1) continue;
                    for (const Partition& mu : hooks_of(n)) {
                        if (mu.hook_leg() < 1) continue;
                        for (int s = 1; s <= n / p; ++s) {
                            CaseSpec spec = base(p);
                            spec.mu = mu;
                            spec.s = s;
                            out.push_back(spec);
                        }
                    }
                }
            break;
        }
        case Tag::Prop24iii: {
            for (int p : c.primes)
                for (int n = 1; n <= c.partitions_n_max; ++n) {
                    if (n / p < 1) continue;
                    for (const Partition& mu : partitions_of(n)) {
                        if (!prop24iii_criterion(mu, p)) continue;
                        CaseSpec spec = base(p);
                        spec.mu = mu;
                        spec.s = n / p;
                        out.push_back(spec);
                    }
                }
            break;
        }
        case Tag::Lemma43ii: {
            for (int p : c.primes)
                for (int n = 2 * p; n <= c.hook_n_max; ++n)
                    for (const Partition& mu : hooks_of(n)) {
                        CaseSpec spec = base(p);
                        spec.mu = mu;
                        spec.s = n / p;
                        out.push_back(spec);
                    }
            break;
        }
        case Tag::Complexity: {
            for (int p : c.primes)
                for (int n = 1; n <= c.hook_n_max; ++n)
                    for (const Partition& mu : hooks_of(n)) {
                        CaseSpec spec = base(p);
                        spec.mu = mu;
                        out.push_back(spec);
                    }
            break;
        }
    }
    return out;
}

VerifyConfig config_from_json(const Json& j) {
    VerifyConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "tags") {
            c.tags.clear();
            if (value.is_string() && value.get<std::string>() == "all") {
                c.tags = all_tags();
            } else {
                for (const auto& t : value) c.tags.push_back(tag_parse(t.get<std::string>()));
            }
        } else if (key == "samples") {
            c.sampling.samples = value.get<int>();
        } else if (key == "ext") {
            c.sampling.ext = value.get<int>();
        } else if (key == "seed") {
            c.sampling.seed = value.get<uint64_t>();
        } else if (key == "hook_n_max") {
            c.hook_n_max = value.get<int>();
        } else if (key == "signed_n_max") {
            c.signed_n_max = value.get<int>();
        } else if (key == "signed_dim_max") {
            c.signed_dim_max = value.get<long>();
        } else if (key == "partitions_n_max") {
            c.partitions_n_max = value.get<int>();
        } else if (key == "cor42_n_max") {
            c.cor42_n_max = value.get<int>();
        } else if (key == "primes") {
            c.primes.clear();
            for (const auto& p : value) c.primes.push_back(p.get<int>());
        } else if (key == "ambient_cap") {
            c.caps.ambient_cap = value.get<long>();
        } else if (key == "specht_cap") {
            c.caps.specht_cap = value.get<long>();
        } else if (key == "timing") {
            c.timing = value.get<bool>();
        } else if (key == "perturb_selftest") {
            c.perturb_selftest = value.get<bool>();
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return c;
}

Json config_echo(const VerifyConfig& c) {
    Json j;
    Json tags = Json::array();
    for (Tag t : c.tags) tags.push_back(tag_name(t));
    j["tags"] = tags;
    j["samples"] = c.sampling.samples;
    j["ext"] = c.sampling.ext;
    j["seed"] = c.sampling.seed;
    j["hook_n_max"] = c.hook_n_max;
    j["signed_n_max"] = c.signed_n_max;
    j["signed_dim_max"] = c.signed_dim_max;
    j["partitions_n_max"] = c.partitions_n_max;
    j["cor42_n_max"] = c.cor42_n_max;
    Json primes = Json::array();
    for (int p : c.primes) primes.push_back(p);
    j["primes"] = primes;
    j["ambient_cap"] = c.caps.ambient_cap;
    j["specht_cap"] = c.caps.specht_cap;
    j["perturb_selftest"] = c.perturb_selftest;
    return j;
}

namespace {

Json case_json(const CaseResult& r, bool timing) {
    const CaseSpec& spec = r.spec;
    Json j;
    j["id"] = spec.id();
    j["tag"] = tag_name(spec.tag);
    j["p"] = spec.p;
    if (spec.tag == Tag::Thm32) {
        j["alpha"] = spec.alpha.str();
        j["beta"] = spec.beta.str();
    } else {
        j["mu"] = spec.mu.str();
    }
    if (spec.s > 0) j["s"] = spec.s;
    j["samples"] = spec.sampling.samples;
    j["ext"] = spec.sampling.ext;
    j["master_seed"] = spec.sampling.seed;
    j["case_seed"] = spec.case_seed();
    j["backend"] = spec.backend;
    if (spec.perturb) j["perturb"] = true;
    j["predicted"] = r.predicted;
    j["computed"] = r.computed;
    j["verdict"] = r.verdict;
    j["detail"] = r.detail;
    if (timing) j["millis"] = r.millis;
    return j;
}

VerifyReport aggregate(const std::vector<CaseResult>& results, const Json& config, bool timing) {
    VerifyReport rep;
    Json cases = Json::array();
    long pass = 0, fail = 0, skipped = 0;
    std::map<std::string, std::array<long, 3>> per_tag;
    for (const auto& r : results) {
        cases.push_back(case_json(r, timing));
        auto& bucket = per_tag[tag_name(r.spec.tag)];
        if (r.verdict == "PASS") {
            ++pass;
            ++bucket[0];
        } else if (r.verdict == "FAIL") {
            ++fail;
            ++bucket[1];
        } else {
            ++skipped;
            ++bucket[2];
        }
    }
    rep.json["schema"] = "specht-verify/1";
    rep.json["config"] = config;
    rep.json["cases"] = cases;
    Json summary;
    summary["total"] = static_cast<long>(results.size());
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["skipped"] = skipped;
    rep.json["summary"] = summary;
    rep.exit_code = fail > 0 ? 1 : 0;

    std::string text;
    for (const auto& [tag, bucket] : per_tag) {
        text += tag + ": " + std::to_string(bucket[0]) + " pass, " + std::to_string(bucket[1]) +
                " fail, " + std::to_string(bucket[2]) + " skipped\n";
    }
    text += "total: " + std::to_string(results.size()) + " cases, " + std::to_string(pass) +
            " pass, " + std::to_string(fail) + " fail, " + std::to_string(skipped) + " skipped\n";
    rep.summary = text;
    return rep;
}

}  // namespace

VerifyReport run_campaign(const VerifyConfig& c) {
    std::vector<CaseResult> results;
    for (Tag tag : c.tags)
        for (const CaseSpec& spec : build_cases(tag, c)) results.push_back(run_case(spec, c.caps));
    if (c.perturb_selftest) {
        CaseSpec spec;
        spec.tag = Tag::Thm44;
        spec.p = 2;
        spec.mu = Partition::make({2, 1, 1});
        spec.s = 2;
        spec.sampling = c.sampling;
        spec.perturb = true;
        results.push_back(run_case(spec, c.caps));
    }
    return aggregate(results, config_echo(c), c.timing);
}

VerifyReport replay_witness(const Json& witness, const Caps& caps) {
    std::vector<Json> case_objs;
    if (witness.contains("cases")) {
        for (const auto& cj : witness["cases"]) case_objs.push_back(cj);
    } else {
        case_objs.push_back(witness);
    }
    std::vector<CaseResult> results;
    for (const auto& cj : case_objs) {
        CaseSpec spec;
        spec.tag = tag_parse(cj.at("tag").get<std::string>());
        spec.p = cj.at("p").get<int>();
        if (cj.contains("mu")) spec.mu = Partition::parse(cj.at("mu").get<std::string>());
        if (cj.contains("alpha")) spec.alpha = Partition::parse(cj.at("alpha").get<std::string>());
        if (cj.contains("beta")) spec.beta = Partition::parse(cj.at("beta").get<std::string>());
        if (cj.contains("s")) spec.s = cj.at("s").get<int>();
        if (cj.contains("samples")) spec.sampling.samples = cj.at("samples").get<int>();
        if (cj.contains("ext")) spec.sampling.ext = cj.at("ext").get<int>();
        if (cj.contains("master_seed")) spec.sampling.seed = cj.at("master_seed").get<uint64_t>();
        if (cj.contains("backend")) spec.backend = cj.at("backend").get<std::string>();
        if (cj.contains("perturb")) spec.perturb = cj.at("perturb").get<bool>();
        results.push_back(run_case(spec, caps));
    }
    Json config;
    config["replay"] = true;
    return aggregate(results, config, false);
}

}  // namespace specht
