#include "specht/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace specht {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= n() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::cycle(int n, const std::vector<int>& cyc) {
    Perm p = identity(n);
    if (cyc.empty()) return p;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= n) throw std::invalid_argument("Perm::cycle: point out of range");
        p.img_[from] = to;
    }
    // Validate the cycle had distinct points.
    return Perm(p.img_);
}

Perm Perm::then(const Perm& b) const {
    if (n() != b.n()) throw std::invalid_argument("Perm::then: size mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < n(); ++i) r.img_[i] = b.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < n(); ++i) r.img_[img_[i]] = i;
    return r;
}

int Perm::sign() const {
    std::vector<char> seen(img_.size(), 0);
    int sgn = 1;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

bool Perm::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<Perm> disjoint_p_cycles(int n, int s, int p) {
    if (s < 0 || p < 2) throw std::invalid_argument("disjoint_p_cycles: bad parameters");
    if (static_cast<long>(s) * p > n)
        throw std::invalid_argument("disjoint_p_cycles: s*p = " + std::to_string(static_cast<long>(s) * p) +
                                    " exceeds n = " + std::to_string(n));
    std::vector<Perm> gens;
    gens.reserve(s);
    for (int i = 0; i < s; ++i) {
        std::vector<int> cyc(p);
        for (int j = 0; j < p; ++j) cyc[j] = i * p + j;
        gens.push_back(Perm::cycle(n, cyc));
    }
    return gens;
}

}  // namespace specht
