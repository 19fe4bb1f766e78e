#include "specht/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace specht {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<int>;  // coefficients low -> high, not necessarily normalized

// Remainder of a mod b over GF(p); b monic.
Poly poly_mod(Poly a, const Poly& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p * p) % p;
        }
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const Poly& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// Trial division up to degree e/2.
bool is_irreducible(const Poly& f, int p) {
    int e = static_cast<int>(f.size()) - 1;
    if (e == 1) return true;
    for (int k = 1; 2 * k <= e; ++k) {
        long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (long t = 0; t < count; ++t) {
            Poly g(k + 1, 0);
            g[k] = 1;
            long tt = t;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<int>(tt % p);
                tt /= p;
            }
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

FieldCtx::FieldCtx(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p) || p > 251) throw std::invalid_argument("FieldCtx: p must be a prime <= 251");
    if (e < 1 || e > kMaxExt) throw std::invalid_argument("FieldCtx: extension degree must be in 1..16");

    // Lexicographically least monic irreducible: scan the low-coefficient
    // vector as a base-p integer, most significant digit = x^{e-1}.
    BigInt total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    Poly f;
    for (BigInt m = 0; m < total; ++m) {
        f.assign(e + 1, 0);
        f[e] = 1;
        BigInt mm = m;
        for (int i = 0; i < e; ++i) {
            f[i] = static_cast<int>(mpz_fdiv_ui(mm.get_mpz_t(), p));
            mm /= p;
        }
        if (is_irreducible(f, p)) break;
        f.clear();
    }
    if (f.empty()) throw std::logic_error("FieldCtx: no irreducible modulus found");
    mod_full_ = f;

    if (e > 1) {
        // red_[k] = x^{e+k} mod f.
        std::array<uint8_t, kMaxExt> cur{};
        for (int j = 0; j < e; ++j) cur[j] = static_cast<uint8_t>(((-f[j]) % p + p) % p);
        red_[0] = cur;
        for (int k = 1; k <= e - 2; ++k) {
            std::array<uint8_t, kMaxExt> nxt{};
            int top = cur[e - 1];
            for (int j = e - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top) {
                for (int j = 0; j < e; ++j)
                    nxt[j] = static_cast<uint8_t>((nxt[j] + top * red_[0][j]) % p);
            }
            red_[k] = nxt;
            cur = nxt;
        }
        if (p == 2) {
            for (int k = 0; k <= e - 2; ++k) {
                uint64_t mask = 0;
                for (int j = 0; j < e; ++j)
                    if (red_[k][j]) mask |= 1ULL << j;
                red2_[k] = mask;
            }
        }
    }
}

const FieldCtx& FieldCtx::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, e))).first;
    }
    return *it->second;
}

BigInt FieldCtx::order() const {
    BigInt q = 1;
    for (int i = 0; i < e_; ++i) q *= p_;
    return q;
}

Fq FieldCtx::from_int(long v) const {
    long m = v % p_;
    if (m < 0) m += p_;
    Fq r;
    r.c[0] = static_cast<uint8_t>(m);
    return r;
}

Fq FieldCtx::pow(const Fq& a, const BigInt& k) const {
    if (k < 0) throw std::invalid_argument("FieldCtx::pow: negative exponent");
    Fq r = one();
    long bits = k == 0 ? 0 : static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        r = mul(r, r);
        if (mpz_tstbit(k.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

Fq FieldCtx::inv(const Fq& a) const {
    if (is_zero(a)) throw std::domain_error("FieldCtx::inv: zero has no inverse");
    return pow(a, order() - 2);
}

Fq FieldCtx::random(SplitRng& rng) const {
    Fq r;
    for (int i = 0; i < e_; ++i) r.c[i] = static_cast<uint8_t>(rng.below(p_));
    return r;
}

Fq FieldCtx::random_nonzero(SplitRng& rng) const {
    for (;;) {
        Fq r = random(rng);
        if (!is_zero(r)) return r;
    }
}

std::string FieldCtx::str(const Fq& a) const {
    std::string s;
    for (int i = 0; i < e_; ++i) {
        if (i) s += ',';
        s += std::to_string(a.c[i]);
    }
    return s;
}

std::vector<int> FieldElement::coefficients() const {
    std::vector<int> out(F_->e());
    for (int i = 0; i < F_->e(); ++i) out[i] = v_.c[i];
    return out;
}

MatrixF MatrixF::identity(const FieldCtx& F, int n) {
    MatrixF m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

MatrixF MatrixF::lift(const FieldCtx& big) const {
    if (big.p() != F_->p()) throw std::invalid_argument("MatrixF::lift: different characteristic");
    if (F_->e() != 1) throw std::invalid_argument("MatrixF::lift: source must be a prime field");
    MatrixF m(big, rows_, cols_);
    m.a_ = a_;
    return m;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
    if (a.cols() != b.rows() || &a.ctx() != &b.ctx())
        throw std::invalid_argument("mat_mul: shape or field mismatch");
    const FieldCtx& F = a.ctx();
    MatrixF c(F, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        Fq* ci = c.row(i);
        const Fq* ai = a.row(i);
        for (int k = 0; k < a.cols(); ++k) row_axpy(F, ci, b.row(k), ai[k], b.cols());
    }
    return c;
}

MatrixF mat_sub(const MatrixF& a, const MatrixF& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || &a.ctx() != &b.ctx())
        throw std::invalid_argument("mat_sub: shape or field mismatch");
    const FieldCtx& F = a.ctx();
    MatrixF c(F, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
    return c;
}

MatrixF mat_inverse(const MatrixF& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_inverse: not square");
    const FieldCtx& F = a.ctx();
    const int n = a.rows();
    MatrixF work = a;
    MatrixF inv = MatrixF::identity(F, n);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (!F.is_zero(work.at(r, c))) {
                pr = r;
                break;
            }
        if (pr < 0) throw std::domain_error("mat_inverse: singular matrix");
        if (pr != c)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pr, j), work.at(c, j));
                std::swap(inv.at(pr, j), inv.at(c, j));
            }
        Fq pinv = F.inv(work.at(c, c));
        for (int j = 0; j < n; ++j) {
            work.at(c, j) = F.mul(work.at(c, j), pinv);
            inv.at(c, j) = F.mul(inv.at(c, j), pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            Fq f = work.at(r, c);
            if (F.is_zero(f)) continue;
            row_axmy(F, work.row(r), work.row(c), f, n);
            row_axmy(F, inv.row(r), inv.row(c), f, n);
        }
    }
    return inv;
}

bool is_zero_matrix(const MatrixF& m) {
    Fq z{};
    for (int i = 0; i < m.rows(); ++i) {
        const Fq* r = m.row(i);
        for (int j = 0; j < m.cols(); ++j)
            if (!(r[j] == z)) return false;
    }
    return true;
}

int rank(const MatrixF& m) {
    const FieldCtx& F = m.ctx();
    const int cols = m.cols();
    std::vector<std::vector<Fq>> ech;
    std::vector<int> piv;
    std::vector<Fq> pivinv;
    std::vector<Fq> v(cols);
    for (int r = 0; r < m.rows(); ++r) {
        const Fq* src = m.row(r);
        std::copy(src, src + cols, v.begin());
        for (size_t k = 0; k < ech.size(); ++k) {
            const Fq& c = v[piv[k]];
            if (F.is_zero(c)) continue;
            Fq f = F.mul(c, pivinv[k]);
            row_axmy(F, v.data() + piv[k], ech[k].data() + piv[k], f, cols - piv[k]);
        }
        int lead = -1;
        for (int j = 0; j < cols; ++j) {
            if (!F.is_zero(v[j])) {
                lead = j;
                break;
            }
        }
        if (lead >= 0) {
            piv.push_back(lead);
            pivinv.push_back(F.inv(v[lead]));
            ech.push_back(v);
            if (static_cast<int>(ech.size()) == cols) return cols;
        }
    }
    return static_cast<int>(ech.size());
}

void RankSequence::validate() const {
    if (r.size() < 2) throw std::invalid_argument("RankSequence: needs r_0..r_p");
    if (r.back() != 0) throw std::invalid_argument("RankSequence: r_p must be 0");
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] > r[i - 1]) throw std::invalid_argument("RankSequence: not weakly decreasing");
    for (size_t i = 1; i + 1 < r.size(); ++i)
        if (r[i - 1] - r[i] < r[i] - r[i + 1])
            throw std::invalid_argument("RankSequence: not convex");
}

long long JordanType::total_dim() const {
    long long d = 0;
    for (size_t j = 0; j < counts.size(); ++j) d += static_cast<long long>(j + 1) * counts[j];
    return d;
}

JordanType JordanType::stable() const {
    JordanType s = *this;
    if (!s.counts.empty()) s.counts.pop_back();
    return s.normalized();
}

bool JordanType::is_empty() const {
    for (long long c : counts)
        if (c) return false;
    return true;
}

JordanType JordanType::normalized() const {
    JordanType s = *this;
    while (!s.counts.empty() && s.counts.back() == 0) s.counts.pop_back();
    return s;
}

bool JordanType::normalized_eq(const JordanType& o) const {
    return normalized().counts == o.normalized().counts;
}

std::string JordanType::str() const {
    JordanType s = normalized();
    if (s.counts.empty()) return "()";
    std::string out = "(";
    bool first = true;
    for (size_t j = 0; j < s.counts.size(); ++j) {
        if (!s.counts[j]) continue;
        if (!first) out += ',';
        first = false;
        out += std::to_string(j + 1) + "^" + std::to_string(s.counts[j]);
    }
    out += ")";
    return out;
}

JordanType jordan_from_ranks(const RankSequence& rs) {
    rs.validate();
    const int p = rs.p();
    JordanType jt;
    jt.counts.assign(p, 0);
    for (int j = 1; j <= p; ++j) {
        long long rjm1 = rs.r[j - 1];
        long long rj = rs.r[j];
        long long rjp1 = (j + 1 <= p) ? rs.r[j + 1] : 0;
        jt.counts[j - 1] = rjm1 - 2 * rj + rjp1;
    }
    if (jt.total_dim() != rs.dim()) throw std::logic_error("jordan_from_ranks: dimension mismatch");
    return jt;
}

JordanType jordan_sum(const JordanType& a, const JordanType& b) {
    JordanType s;
    s.counts.assign(std::max(a.counts.size(), b.counts.size()), 0);
    for (size_t j = 0; j < a.counts.size(); ++j) s.counts[j] += a.counts[j];
    for (size_t j = 0; j < b.counts.size(); ++j) s.counts[j] += b.counts[j];
    return s;
}

std::pair<RankSequence, bool> dominance_max(const std::vector<RankSequence>& seqs) {
    if (seqs.empty()) throw std::invalid_argument("dominance_max: empty input");
    const size_t len = seqs[0].r.size();
    for (const auto& s : seqs)
        if (s.r.size() != len || s.dim() != seqs[0].dim())
            throw std::invalid_argument("dominance_max: mixed dimensions");
    RankSequence mx = seqs[0];
    for (const auto& s : seqs)
        for (size_t i = 0; i < len; ++i) mx.r[i] = std::max(mx.r[i], s.r[i]);
    bool attained = false;
    for (const auto& s : seqs)
        if (s.r == mx.r) attained = true;
    return {mx, attained};
}

MatrixF random_matrix(const FieldCtx& F, int rows, int cols, SplitRng& rng) {
    MatrixF m(F, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = F.random(rng);
    return m;
}

MatrixF random_invertible(const FieldCtx& F, int n, SplitRng& rng) {
    for (;;) {
        MatrixF m = random_matrix(F, n, n, rng);
        if (rank(m) == n) return m;
    }
}

MatrixF nilpotent_from_type(const FieldCtx& F, const JordanType& jt) {
    int dim = static_cast<int>(jt.total_dim());
    MatrixF n(F, dim, dim);
    int pos = 0;
    for (size_t j = 0; j < jt.counts.size(); ++j) {
        int size = static_cast<int>(j) + 1;
        for (long long copy = 0; copy < jt.counts[j]; ++copy) {
            for (int i = 0; i + 1 < size; ++i) n.at(pos + i, pos + i + 1) = F.one();
            pos += size;
        }
    }
    return n;
}

RankSequence rank_sequence_of_nilpotent(const MatrixF& n, int p) {
    RankSequence rs;
    rs.r.push_back(n.rows());
    MatrixF m = n;
    for (int i = 1; i <= p; ++i) {
        rs.r.push_back(rank(m));
        if (i < p) m = mat_mul(m, n);
    }
    return rs;
}

}  // namespace specht
