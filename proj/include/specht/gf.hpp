#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/rng.hpp"

namespace specht {

inline constexpr int kMaxExt = 16;

// Element of GF(p^e), e <= kMaxExt: coefficient vector of the residue
// polynomial, low degree first.  Plain value type; all arithmetic goes
// through the owning FieldCtx.
struct Fq {
    std::array<uint8_t, kMaxExt> c{};
    bool operator==(const Fq&) const = default;
};

// GF(p^e) with the lexicographically least monic irreducible modulus of
// degree e over GF(p).  Contexts are interned: get() returns a reference
// that stays valid for the lifetime of the process.
class FieldCtx {
  public:
    static const FieldCtx& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    BigInt order() const;                             // p^e
    const std::vector<int>& modulus() const { return mod_full_; }  // c_0..c_e, monic

    Fq zero() const { return Fq{}; }
    Fq one() const {
        Fq r;
        r.c[0] = 1;
        return r;
    }
    Fq from_int(long v) const;
    bool is_zero(const Fq& a) const { return a == Fq{}; }

    Fq add(const Fq& a, const Fq& b) const {
        Fq r;
        for (int i = 0; i < e_; ++i) {
            int t = a.c[i] + b.c[i];
            r.c[i] = static_cast<uint8_t>(t >= p_ ? t - p_ : t);
        }
        return r;
    }
    Fq sub(const Fq& a, const Fq& b) const {
        Fq r;
        for (int i = 0; i < e_; ++i) {
            int t = a.c[i] - b.c[i];
            r.c[i] = static_cast<uint8_t>(t < 0 ? t + p_ : t);
        }
        return r;
    }
    Fq neg(const Fq& a) const { return sub(Fq{}, a); }

    Fq mul(const Fq& a, const Fq& b) const {
        if (e_ == 1) {
            Fq r;
            r.c[0] = static_cast<uint8_t>((a.c[0] * b.c[0]) % p_);
            return r;
        }
        if (p_ == 2) return mul2(a, b);
        uint32_t conv[2 * kMaxExt - 1] = {};
        for (int i = 0; i < e_; ++i) {
            uint32_t ai = a.c[i];
            if (!ai) continue;
            for (int j = 0; j < e_; ++j) conv[i + j] += ai * b.c[j];
        }
        Fq r;
        for (int j = 0; j < e_; ++j) {
            uint32_t acc = conv[j];
            for (int k = 0; k < e_ - 1; ++k) acc += conv[e_ + k] * red_[k][j];
            r.c[j] = static_cast<uint8_t>(acc % p_);
        }
        return r;
    }

    Fq pow(const Fq& a, const BigInt& k) const;
    Fq inv(const Fq& a) const;  // throws std::domain_error on zero

    Fq random(SplitRng& rng) const;
    Fq random_nonzero(SplitRng& rng) const;

    std::string str(const Fq& a) const;  // coefficient list "c0,c1,..."

  private:
    FieldCtx(int p, int e);

    Fq mul2(const Fq& a, const Fq& b) const {
        uint32_t pa = 0, pb = 0;
        for (int i = 0; i < e_; ++i) {
            pa |= static_cast<uint32_t>(a.c[i]) << i;
            pb |= static_cast<uint32_t>(b.c[i]) << i;
        }
        uint64_t acc = 0;
        while (pa) {
            int i = __builtin_ctz(pa);
            pa &= pa - 1;
            acc ^= static_cast<uint64_t>(pb) << i;
        }
        for (int k = 2 * e_ - 2; k >= e_; --k)
            if ((acc >> k) & 1) acc ^= red2_[k - e_] | (1ULL << k);
        Fq r;
        for (int i = 0; i < e_; ++i) r.c[i] = static_cast<uint8_t>((acc >> i) & 1);
        return r;
    }

    int p_, e_;
    std::vector<int> mod_full_;                      // c_0..c_e
    std::array<std::array<uint8_t, kMaxExt>, kMaxExt> red_{};  // x^{e+k} mod f
    std::array<uint64_t, kMaxExt> red2_{};           // packed reduction masks, p = 2
};

// Spec-facing scalar: a field element together with its context.
class FieldElement {
  public:
    FieldElement(const FieldCtx& F, Fq v) : F_(&F), v_(v) {}
    static FieldElement from_int(const FieldCtx& F, long v) { return {F, F.from_int(v)}; }

    const FieldCtx& ctx() const { return *F_; }
    const Fq& raw() const { return v_; }
    std::vector<int> coefficients() const;
    bool is_zero() const { return F_->is_zero(v_); }

    FieldElement operator+(const FieldElement& o) const { return {*F_, F_->add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {*F_, F_->sub(v_, o.v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {*F_, F_->mul(v_, o.v_)}; }
    FieldElement inverse() const { return {*F_, F_->inv(v_)}; }
    bool operator==(const FieldElement& o) const { return v_ == o.v_; }

  private:
    const FieldCtx* F_;
    Fq v_;
};

// Dense row-major matrix over a FieldCtx.
class MatrixF {
  public:
    MatrixF() = default;
    MatrixF(const FieldCtx& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatrixF identity(const FieldCtx& F, int n);

    const FieldCtx& ctx() const { return *F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fq& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Fq& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Fq* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
    const Fq* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }

    // Re-interpret entries in a larger extension of the same prime field.
    MatrixF lift(const FieldCtx& big) const;

    bool operator==(const MatrixF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    const FieldCtx* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Fq> a_;
};

// y += f*x over n entries.
inline void row_axpy(const FieldCtx& F, Fq* y, const Fq* x, const Fq& f, int n) {
    if (F.is_zero(f)) return;
    for (int i = 0; i < n; ++i)
        if (!F.is_zero(x[i])) y[i] = F.add(y[i], F.mul(f, x[i]));
}
// y -= f*x over n entries.
inline void row_axmy(const FieldCtx& F, Fq* y, const Fq* x, const Fq& f, int n) {
    if (F.is_zero(f)) return;
    for (int i = 0; i < n; ++i)
        if (!F.is_zero(x[i])) y[i] = F.sub(y[i], F.mul(f, x[i]));
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);
MatrixF mat_sub(const MatrixF& a, const MatrixF& b);
MatrixF mat_inverse(const MatrixF& a);  // throws std::domain_error when singular
bool is_zero_matrix(const MatrixF& m);

// Row-echelon rank; streams rows and stops early at full column rank.
int rank(const MatrixF& m);

// Ranks r_0..r_p of the powers N^0..N^p of a p-nilpotent operator.
struct RankSequence {
    std::vector<int> r;

    int dim() const { return r.empty() ? 0 : r[0]; }
    int p() const { return static_cast<int>(r.size()) - 1; }
    // Throws std::invalid_argument unless weakly decreasing, convex and
    // ending at 0.
    void validate() const;
    bool operator==(const RankSequence&) const = default;
};

// Multiset of Jordan block sizes: counts[j-1] = number of blocks of size j.
struct JordanType {
    std::vector<long long> counts;

    long long total_dim() const;
    JordanType stable() const;  // drops the maximal (projective) size
    bool is_empty() const;
    std::string str() const;  // "(1^2,2^1)", "()" when empty
    JordanType normalized() const;

    bool operator==(const JordanType& o) const { return normalized_eq(o); }

  private:
    bool normalized_eq(const JordanType& o) const;
};

JordanType jordan_from_ranks(const RankSequence& rs);
JordanType jordan_sum(const JordanType& a, const JordanType& b);

// Pointwise maximum; the flag reports whether one input attains the
// maximum at every index.
std::pair<RankSequence, bool> dominance_max(const std::vector<RankSequence>& seqs);

// Test and sampling helpers.
MatrixF random_matrix(const FieldCtx& F, int rows, int cols, SplitRng& rng);
MatrixF random_invertible(const FieldCtx& F, int n, SplitRng& rng);
MatrixF nilpotent_from_type(const FieldCtx& F, const JordanType& jt);
RankSequence rank_sequence_of_nilpotent(const MatrixF& n, int p);

}  // namespace specht
