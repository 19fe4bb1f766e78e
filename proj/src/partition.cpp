#include "specht/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "specht/common.hpp"

namespace specht {

Partition Partition::make(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    Partition mu;
    mu.parts_ = std::move(parts);
    for (int x : mu.parts_) mu.n_ += x;
    return mu;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos));
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return make(std::move(parts));
}

bool Partition::is_hook() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

int Partition::hook_arm() const { return parts_.empty() ? 0 : parts_[0]; }
int Partition::hook_leg() const { return parts_.empty() ? 0 : rows() - 1; }

std::vector<int> Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_[0], 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[j];
    return conj;
}

int Partition::hook_length(int i, int j) const {
    std::vector<int> conj = conjugate();
    return parts_[i] - j + conj[j] - i - 1;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

HookData HookData::of(const Partition& mu, int p) {
    if (p < 2) throw std::invalid_argument("HookData: p must be at least 2");
    if (!mu.is_hook())
        throw std::invalid_argument("HookData: " + mu.str() + " is not a hook partition");
    HookData h;
    h.p = p;
    h.a = mu.hook_arm();
    h.b = mu.hook_leg();
    h.d = (h.a + h.b) / p;
    h.r = (h.a + h.b) % p;
    h.u = h.a / p;
    h.a0 = h.a % p;
    h.v = h.b / p;
    h.b0 = h.b % p;
    return h;
}

Partition HookData::partition() const {
    if (a == 0 && b == 0) return Partition();
    std::vector<int> parts{a};
    parts.insert(parts.end(), b, 1);
    return Partition::make(std::move(parts));
}

namespace {

Partition core_from_betas(std::vector<long> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<long>());
    std::vector<int> parts;
    const long L = static_cast<long>(betas.size());
    for (long i = 0; i < L; ++i) {
        long part = betas[i] - (L - 1 - i);
        if (part > 0) parts.push_back(static_cast<int>(part));
    }
    return Partition::make(std::move(parts));
}

}  // namespace

CoreWeight p_core_weight(const Partition& mu, int p) {
    if (p < 2) throw std::invalid_argument("p_core_weight: p must be at least 2");
    // First-column hook lengths with exactly len(parts) beads.
    std::set<long> betas;
    const int L = mu.rows();
    for (int i = 0; i < L; ++i) betas.insert(mu.part(i) + (L - 1 - i));
    int weight = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = betas.begin(); it != betas.end(); ++it) {
            long beta = *it;
            if (beta - p >= 0 && !betas.count(beta - p)) {
                betas.erase(it);
                betas.insert(beta - p);
                ++weight;
                moved = true;
                break;
            }
        }
    }
    CoreWeight cw;
    cw.core = core_from_betas(std::vector<long>(betas.begin(), betas.end()));
    cw.weight = weight;
    return cw;
}

namespace {

// Removable rim p-hooks correspond to cells of hook length exactly p;
// removing one deletes the cells (r, c) with r >= i, c >= j and
// (r+1, c+1) outside the diagram.
Partition remove_rim_hook(const Partition& mu, int i, int j) {
    const auto& parts = mu.parts();
    std::vector<int> rows(parts.begin(), parts.end());
    for (int r = i; r < mu.rows(); ++r) {
        if (parts[r] <= j) break;
        int next = (r + 1 < mu.rows()) ? parts[r + 1] : 0;
        // Row r keeps columns < j plus columns j..next-2 (those whose
        // south-east neighbour exists).
        rows[r] = j + std::max(0, next - 1 - j);
    }
    std::vector<int> out;
    for (int x : rows)
        if (x > 0) out.push_back(x);
    return Partition::make(std::move(out));
}

struct OracleMemo {
    std::map<std::vector<int>, std::pair<Partition, int>> done;
};

std::pair<Partition, int> oracle_rec(const Partition& mu, int p, OracleMemo& memo) {
    auto it = memo.done.find(mu.parts());
    if (it != memo.done.end()) return it->second;
    std::pair<Partition, int> result;
    bool have = false;
    for (int i = 0; i < mu.rows(); ++i) {
        for (int j = 0; j < mu.part(i); ++j) {
            if (mu.hook_length(i, j) != p) continue;
            Partition next = remove_rim_hook(mu, i, j);
            auto sub = oracle_rec(next, p, memo);
            sub.second += 1;
            if (!have) {
                result = sub;
                have = true;
            } else if (!(result.first == sub.first) || result.second != sub.second) {
                throw std::logic_error("rim_hook_oracle: removal orders disagree at " + mu.str());
            }
        }
    }
    if (!have) result = {mu, 0};
    memo.done.emplace(mu.parts(), result);
    return result;
}

}  // namespace

CoreWeight rim_hook_oracle(const Partition& mu, int p) {
    if (p < 2) throw std::invalid_argument("rim_hook_oracle: p must be at least 2");
    if (mu.n() > 20) throw ScaleExceeded("rim_hook_oracle: n > 20");
    OracleMemo memo;
    auto [core, weight] = oracle_rec(mu, p, memo);
    return CoreWeight{core, weight};
}

BigInt specht_dimension(const Partition& mu) {
    BigInt denom = 1;
    for (int i = 0; i < mu.rows(); ++i)
        for (int j = 0; j < mu.part(i); ++j) denom *= mu.hook_length(i, j);
    return factorial(mu.n()) / denom;
}

std::vector<Partition> hooks_of(int n) {
    std::vector<Partition> out;
    for (int a = n; a >= 1; --a) {
        std::vector<int> parts{a};
        parts.insert(parts.end(), n - a, 1);
        out.push_back(Partition::make(std::move(parts)));
    }
    return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition::make(acc));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        acc.push_back(k);
        partitions_rec(n - k, k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace specht
