#include "specht/closed_forms.hpp"

#include <stdexcept>

#include "specht/common.hpp"
#include "specht/permutation.hpp"

namespace specht {

SignedShape SignedShape::of(const Partition& alpha, const Partition& beta, int p) {
    if (p < 2) throw std::invalid_argument("SignedShape: p must be at least 2");
    SignedShape s;
    s.alpha = alpha;
    s.beta = beta;
    s.p = p;
    s.m = alpha.rows();
    s.nn = beta.rows();
    for (int x : alpha.parts()) s.residues.push_back(x % p);
    for (int x : beta.parts()) s.residues.push_back(x % p);
    int n = alpha.n() + beta.n();
    s.d = n / p;
    s.r = n % p;
    int rsum = 0;
    for (int x : s.residues) rsum += x;
    if ((rsum - s.r) % p != 0) throw std::logic_error("SignedShape: residue sum inconsistent");
    s.c = (rsum - s.r) / p;
    return s;
}

Composition SignedShape::shape() const {
    Composition sh(alpha.parts().begin(), alpha.parts().end());
    sh.insert(sh.end(), beta.parts().begin(), beta.parts().end());
    return sh;
}

std::string SignedShape::str() const { return "M(" + alpha.str() + "|" + beta.str() + ")"; }

std::vector<std::vector<int>> lambda_set(const std::vector<int>& ns, int s) {
    std::vector<std::vector<int>> out;
    if (s < 0) return out;
    long total = 0;
    for (int x : ns) total += x;
    if (s > total) return out;
    std::vector<int> cur(ns.size(), 0);
    auto rec = [&](auto&& self, size_t i, int rest) -> void {
        if (i == ns.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int ci = 0; ci <= std::min(ns[i], rest); ++ci) {
            cur[i] = ci;
            self(self, i + 1, rest - ci);
        }
        cur[i] = 0;
    };
    rec(rec, 0, s);
    return out;
}

BigInt n_signed(const SignedShape& sh, int s) {
    if (s < 0 || s > sh.d)
        throw HypothesisError("n_signed: s must satisfy 0 <= s <= d");
    const int p = sh.p;
    std::vector<int> ns;
    for (size_t i = 0; i < sh.residues.size(); ++i) {
        int part = i < static_cast<size_t>(sh.m) ? sh.alpha.part(static_cast<int>(i))
                                                 : sh.beta.part(static_cast<int>(i) - sh.m);
        ns.push_back((part - sh.residues[i]) / p);
    }
    BigInt total = 0;
    for (const auto& cs : lambda_set(ns, s)) {
        BigInt term = factorial(s);
        for (int ci : cs) term /= factorial(ci);
        BigInt rest = factorial((sh.d - s) * p + sh.r);
        for (size_t i = 0; i < cs.size(); ++i) {
            int part = i < static_cast<size_t>(sh.m) ? sh.alpha.part(static_cast<int>(i))
                                                     : sh.beta.part(static_cast<int>(i) - sh.m);
            rest /= factorial(part - cs[i] * p);
        }
        total += term * rest;
    }
    return total;
}

BigInt n_hook(const HookData& h, int s) {
    if (h.r < 1) throw HypothesisError("n_hook: requires r >= 1");
    if (s < 0 || s > h.d) throw HypothesisError("n_hook: s must satisfy 0 <= s <= d");
    BigInt total = 0;
    for (const auto& cs : lambda_set({h.u, h.v}, s)) {
        int c2 = cs[1];
        total += binomial(s, c2) * binomial((h.d - s) * h.p + h.r - 1, h.b - c2 * h.p);
    }
    return total;
}

CorollaryValue corollary_values(const HookData& h) {
    if (h.d < 1) throw HypothesisError("corollary_values: requires d >= 1");
    if (h.r < 1) throw HypothesisError("corollary_values: requires r >= 1");
    CorollaryValue out;
    if (h.r <= h.b0) {
        out.tag = "i";
        out.s_eval = h.d - 1;
        out.complexity = h.d - 1;
        out.value = binomial(h.d - 1, h.v) * binomial(h.p + h.r - 1, h.b0);
    } else {
        out.tag = "ii";
        out.s_eval = h.d;
        out.complexity = h.d;
        out.value = binomial(h.d, h.v) * binomial(h.r - 1, h.b0);
    }
    return out;
}

Prediction thm44_prediction(const HookData& h) {
    if (h.r != 0) throw HypothesisError("thm44_prediction: requires r = 0");
    if (h.d < 1) throw HypothesisError("thm44_prediction: requires d >= 1");
    const int sigma = h.v;  // b = sigma*p + b0
    BigInt mult = binomial(h.d - 1, sigma);
    Prediction out;
    out.stable.counts.assign(h.p - 1, 0);
    int size = h.b0 % 2 == 0 ? 1 : h.p - 1;
    out.stable.counts[size - 1] = mult.get_si();
    out.stable = out.stable.normalized();
    out.complexity = h.d;
    out.source = "parity dichotomy at E_d";
    return out;
}

int predicted_complexity_hook(const Partition& mu, int p) {
    if (!mu.is_hook()) throw std::invalid_argument("predicted_complexity_hook: not a hook");
    return p_core_weight(mu, p).weight;
}

int predicted_complexity_signed(const SignedShape& shape) { return shape.d - shape.c; }

bool prop24iii_criterion(const Partition& mu, int p) {
    CoreWeight cw = p_core_weight(mu, p);
    return cw.core.n() > mu.n() % p;
}

BigInt fixed_tabloid_count(const Composition& shape, int p, int s, long cap) {
    int n = composition_n(shape);
    if (static_cast<long>(s) * p > n)
        throw std::invalid_argument("fixed_tabloid_count: s*p exceeds n");
    WordSpace ws(shape, static_cast<uint64_t>(cap));
    BigInt count = 0;
    for (uint64_t idx = 0; idx < ws.dim(); ++idx) {
        std::vector<uint8_t> w = ws.unrank(idx);
        bool fixed = true;
        for (int i = 0; i < s && fixed; ++i)
            for (int j = 1; j < p; ++j)
                if (w[i * p + j] != w[i * p]) {
                    fixed = false;
                    break;
                }
        if (fixed) ++count;
    }
    return count;
}

}  // namespace specht
