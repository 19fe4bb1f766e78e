#include "specht/polyrank.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "specht/common.hpp"

namespace specht {

namespace {

using Exp = std::array<int, 2>;

// Sparse polynomial in at most two variables over GF(p).
struct Poly {
    std::map<Exp, int> terms;

    bool is_zero() const { return terms.empty(); }
};

struct PolyRing {
    int p;
    long term_cap;
    long terms_seen = 0;

    void bump(size_t k) {
        terms_seen += static_cast<long>(k);
        if (terms_seen > term_cap) throw ScaleExceeded("polyrank: term cap exceeded");
    }

    Poly constant(int v) const {
        Poly q;
        int m = ((v % p) + p) % p;
        if (m) q.terms[{0, 0}] = m;
        return q;
    }
    Poly variable(int i) const {
        Poly q;
        Exp e{0, 0};
        e[i] = 1;
        q.terms[e] = 1;
        return q;
    }

    void add_term(Poly& a, const Exp& e, int c) const {
        int v = (a.terms.count(e) ? a.terms[e] : 0) + c;
        v = ((v % p) + p) % p;
        if (v)
            a.terms[e] = v;
        else
            a.terms.erase(e);
    }

    Poly add(const Poly& a, const Poly& b) const {
        Poly r = a;
        for (const auto& [e, c] : b.terms) add_term(r, e, c);
        return r;
    }
    Poly sub(const Poly& a, const Poly& b) const {
        Poly r = a;
        for (const auto& [e, c] : b.terms) add_term(r, e, -c);
        return r;
    }
    Poly mul(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms)
                add_term(r, {ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
        bump(r.terms.size());
        return r;
    }
};

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Poly> a;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

PolyMatrix poly_mat_mul(PolyRing& R, const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                if (y.at(k, j).is_zero()) continue;
                z.at(i, j) = R.add(z.at(i, j), R.mul(x.at(i, k), y.at(k, j)));
            }
        }
    return z;
}

// Rank over the fraction field: fraction-free elimination, any nonzero pivot.
int poly_rank(PolyRing& R, const PolyMatrix& m) {
    std::vector<std::vector<Poly>> ech;
    std::vector<int> piv;
    for (int r = 0; r < m.rows; ++r) {
        std::vector<Poly> v(m.cols);
        for (int j = 0; j < m.cols; ++j) v[j] = m.at(r, j);
        for (size_t k = 0; k < ech.size(); ++k) {
            const Poly& vc = v[piv[k]];
            if (vc.is_zero()) continue;
            Poly coef = vc;  // v <- v*w[pc] - w*coef
            const Poly& wpc = ech[k][piv[k]];
            for (int j = 0; j < m.cols; ++j)
                v[j] = R.sub(R.mul(v[j], wpc), R.mul(ech[k][j], coef));
        }
        int lead = -1;
        for (int j = 0; j < m.cols; ++j)
            if (!v[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead >= 0) {
            piv.push_back(lead);
            ech.push_back(std::move(v));
            if (static_cast<int>(ech.size()) == m.cols) return m.cols;
        }
    }
    return static_cast<int>(ech.size());
}

// N = sum x_i (G_i - I) with polynomial entries.
PolyMatrix symbolic_nilpotent_dense(PolyRing& R, const RepE& rep) {
    PolyMatrix n(rep.dim, rep.dim);
    for (int i = 0; i < rep.s; ++i) {
        Poly xi = R.variable(i);
        for (int r = 0; r < rep.dim; ++r)
            for (int c = 0; c < rep.dim; ++c) {
                int g = rep.dense[i].at(r, c).c[0];
                int shifted = r == c ? g - 1 : g;
                if (shifted % rep.p == 0) continue;
                n.at(r, c) = R.add(n.at(r, c), R.mul(xi, R.constant(shifted)));
            }
    }
    return n;
}

PolyMatrix symbolic_nilpotent_block(PolyRing& R, const RepE& rep, const std::vector<int32_t>& block,
                                    const std::vector<int32_t>& loc) {
    const int k = static_cast<int>(block.size());
    PolyMatrix n(k, k);
    for (int i = 0; i < rep.s; ++i) {
        Poly xi = R.variable(i);
        for (int c = 0; c < k; ++c) {
            int32_t j = block[c];
            n.at(loc[rep.mono[i].perm[j]], c) =
                R.add(n.at(loc[rep.mono[i].perm[j]], c), R.mul(xi, R.constant(rep.mono[i].sign[j])));
            n.at(c, c) = R.sub(n.at(c, c), xi);
        }
    }
    return n;
}

// (sum x_i (G_i - I)) * M for a monomial rep.
PolyMatrix symbolic_apply(PolyRing& R, const RepE& rep, const PolyMatrix& m) {
    PolyMatrix out(m.rows, m.cols);
    for (int i = 0; i < rep.s; ++i) {
        Poly xi = R.variable(i);
        const MonomialGen& g = rep.mono[i];
        for (int j = 0; j < m.rows; ++j) {
            if (g.perm[j] == j && g.sign[j] == 1) continue;
            Poly coef = R.mul(xi, R.constant(g.sign[j]));
            for (int c = 0; c < m.cols; ++c) {
                if (m.at(j, c).is_zero()) continue;
                out.at(g.perm[j], c) = R.add(out.at(g.perm[j], c), R.mul(coef, m.at(j, c)));
                out.at(j, c) = R.sub(out.at(j, c), R.mul(xi, m.at(j, c)));
            }
        }
    }
    return out;
}

}  // namespace

RankSequence generic_rank_sequence_symbolic(const RepE& rep, long term_cap) {
    if (rep.s > 2) throw ScaleExceeded("polyrank: s <= 2 only");
    PolyRing R{rep.p, term_cap};
    RankSequence rs;
    rs.r.assign(rep.p + 1, 0);
    rs.r[0] = rep.dim;
    if (rep.dim == 0) return rs;

    if (rep.basis) {
        if (rep.dim > 8 || rep.ambient_dim() > 400)
            throw ScaleExceeded("polyrank: restricted rep too large");
        PolyMatrix m(rep.ambient_dim(), rep.dim);
        for (int r = 0; r < rep.ambient_dim(); ++r)
            for (int c = 0; c < rep.dim; ++c)
                m.at(r, c) = R.constant(rep.basis->at(r, c).c[0]);
        for (int i = 1; i <= rep.p; ++i) {
            m = symbolic_apply(R, rep, m);
            rs.r[i] = poly_rank(R, m);
        }
    } else if (rep.is_monomial()) {
        if (rep.ambient_dim() > 4000) throw ScaleExceeded("polyrank: rep too large");
        std::vector<int32_t> loc(rep.ambient_dim(), -1);
        for (const auto& block : rep.orbits) {
            for (size_t i = 0; i < block.size(); ++i) loc[block[i]] = static_cast<int32_t>(i);
            PolyMatrix n = symbolic_nilpotent_block(R, rep, block, loc);
            PolyMatrix m = n;
            for (int i = 1; i <= rep.p; ++i) {
                int rk = poly_rank(R, m);
                rs.r[i] += rk;
                if (rk == 0) break;
                if (i < rep.p) m = poly_mat_mul(R, m, n);
            }
        }
    } else {
        if (rep.dim > 16) throw ScaleExceeded("polyrank: dense rep too large");
        PolyMatrix n = symbolic_nilpotent_dense(R, rep);
        PolyMatrix m = n;
        for (int i = 1; i <= rep.p; ++i) {
            rs.r[i] = poly_rank(R, m);
            if (i < rep.p && rs.r[i] > 0) m = poly_mat_mul(R, m, n);
        }
    }
    rs.validate();
    return rs;
}

JordanType generic_jordan_type_symbolic(const RepE& rep, long term_cap) {
    RankSequence rs = generic_rank_sequence_symbolic(rep, term_cap);
    if (rep.dim == 0) {
        JordanType jt;
        jt.counts.assign(rep.p, 0);
        return jt;
    }
    return jordan_from_ranks(rs);
}

}  // namespace specht
