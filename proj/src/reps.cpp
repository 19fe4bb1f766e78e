#include "specht/reps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "specht/common.hpp"

namespace specht {

std::vector<Perm> e_generators(int n, int s, int p) { return disjoint_p_cycles(n, s, p); }

namespace {

int8_t reduce_sign(int sign, int p) {
    int v = ((sign % p) + p) % p;
    return static_cast<int8_t>(v);
}

// Orbits of the group generated by the perms (sizes >= 2 only).
std::vector<std::vector<int32_t>> orbit_blocks(const std::vector<MonomialGen>& gens, int dim) {
    std::vector<int32_t> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int32_t(int32_t)> find = [&](int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& g : gens)
        for (int32_t j = 0; j < dim; ++j) {
            int32_t a = find(j), b = find(g.perm[j]);
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int32_t>> buckets(dim);
    for (int32_t j = 0; j < dim; ++j) buckets[find(j)].push_back(j);
    std::vector<std::vector<int32_t>> out;
    for (auto& b : buckets)
        if (b.size() >= 2) out.push_back(std::move(b));
    return out;
}

void finish_monomial(RepE& rep) {
    rep.orbits = orbit_blocks(rep.mono, rep.basis ? rep.ambient_dim() : rep.dim);
    rep.validate();
}

}  // namespace

void RepE::validate() const {
    if (is_monomial()) {
        const int adim = ambient_dim();
        for (const auto& g : mono) {
            if (static_cast<int>(g.perm.size()) != adim || g.sign.size() != g.perm.size())
                throw std::logic_error("RepE: malformed monomial generator");
            for (int j = 0; j < adim; ++j) {
                int x = j;
                int sgn = 1;
                for (int k = 0; k < p; ++k) {
                    sgn = (sgn * g.sign[x]) % p;
                    x = g.perm[x];
                }
                if (x != j || sgn != 1 % p)
                    throw std::logic_error("RepE " + label + ": generator order is not p");
            }
        }
        for (size_t i = 0; i < mono.size(); ++i)
            for (size_t k = i + 1; k < mono.size(); ++k) {
                const auto& a = mono[i];
                const auto& b = mono[k];
                for (int j = 0; j < adim; ++j) {
                    if (a.perm[b.perm[j]] != b.perm[a.perm[j]] ||
                        (b.sign[j] * a.sign[b.perm[j]]) % p != (a.sign[j] * b.sign[a.perm[j]]) % p)
                        throw std::logic_error("RepE " + label + ": generators do not commute");
                }
            }
    } else {
        const FieldCtx& F = FieldCtx::get(p, 1);
        MatrixF eye = MatrixF::identity(F, dim);
        for (const auto& g : dense) {
            MatrixF acc = g;
            for (int k = 1; k < p; ++k) acc = mat_mul(acc, g);
            if (!(acc == eye)) throw std::logic_error("RepE " + label + ": generator order is not p");
        }
        for (size_t i = 0; i < dense.size(); ++i)
            for (size_t k = i + 1; k < dense.size(); ++k)
                if (!(mat_mul(dense[i], dense[k]) == mat_mul(dense[k], dense[i])))
                    throw std::logic_error("RepE " + label + ": generators do not commute");
    }
}

RepE zero_rep(int p, int s) {
    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = 0;
    rep.label = "0";
    rep.mono.assign(s, MonomialGen{});
    return rep;
}

RepE trivial_rep(int p, int s) {
    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = 1;
    rep.label = "k";
    rep.mono.assign(s, MonomialGen{{0}, {1}});
    finish_monomial(rep);
    return rep;
}

RepE regular_rep(int p, int s) {
    long dim = 1;
    for (int i = 0; i < s; ++i) {
        dim *= p;
        if (dim > 1'000'000) throw ScaleExceeded("regular_rep: p^s too large");
    }
    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = static_cast<int>(dim);
    rep.label = "kE_" + std::to_string(s);
    for (int i = 0; i < s; ++i) {
        MonomialGen g;
        g.perm.resize(dim);
        g.sign.assign(dim, 1);
        long stride = 1;
        for (int k = 0; k < i; ++k) stride *= p;
        for (long j = 0; j < dim; ++j) {
            long digit = (j / stride) % p;
            g.perm[j] = static_cast<int32_t>(digit == p - 1 ? j - (p - 1) * stride : j + stride);
        }
        rep.mono.push_back(std::move(g));
    }
    finish_monomial(rep);
    return rep;
}

namespace {

// Monomial generators of the (unsigned) action on tabloid words.
std::vector<MonomialGen> word_action(const WordSpace& ws, const std::vector<Perm>& gens) {
    const int n = ws.n();
    std::vector<MonomialGen> out;
    out.reserve(gens.size());
    std::vector<uint8_t> img(n);
    for (const auto& g : gens) {
        MonomialGen mg;
        mg.perm.resize(ws.dim());
        mg.sign.assign(ws.dim(), 1);
        for (uint64_t idx = 0; idx < ws.dim(); ++idx) {
            std::vector<uint8_t> w = ws.unrank(idx);
            for (int v = 0; v < n; ++v) img[g(v)] = w[v];
            mg.perm[idx] = static_cast<int32_t>(ws.rank(img));
        }
        out.push_back(std::move(mg));
    }
    return out;
}

}  // namespace

RepE specht_rep_ambient(const Partition& mu, int p, int s, const Caps& caps) {
    if (s < 1) throw std::invalid_argument("specht_rep_ambient: s must be >= 1");
    const int n = mu.n();
    auto gens = e_generators(n, s, p);
    WordSpace ws(Composition(mu.parts().begin(), mu.parts().end()), caps.ambient_cap);
    BigInt sd = specht_dimension(mu);
    if (sd > caps.specht_cap) throw ScaleExceeded("specht_rep_ambient: Specht dimension exceeds cap");
    const int m = static_cast<int>(sd.get_ui());

    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = m;
    rep.label = "S^(" + mu.str() + ")";
    rep.mono = word_action(ws, gens);

    const FieldCtx& F = FieldCtx::get(p, 1);
    MatrixF B(F, static_cast<int>(ws.dim()), m);
    std::vector<Tableau> basis = enumerate_standard(mu, caps.specht_cap);
    for (int c = 0; c < m; ++c) {
        for_each_polytabloid_term(
            basis[c],
            [&](const std::vector<uint8_t>& word, int sign) {
                B.at(static_cast<int>(ws.rank(word)), c) = F.from_int(sign);
            },
            caps.colgroup_cap);
    }
    if (rank(B) != m) throw std::logic_error("specht_rep_ambient: basis matrix is rank-deficient");
    rep.basis = std::move(B);
    rep.orbits = orbit_blocks(rep.mono, rep.ambient_dim());
    rep.validate();
    return rep;
}

RepE specht_rep_straightened(const Partition& mu, int p, int s, const Caps& caps) {
    if (s < 1) throw std::invalid_argument("specht_rep_straightened: s must be >= 1");
    const int n = mu.n();
    auto gens = e_generators(n, s, p);
    BigInt sd = specht_dimension(mu);
    if (sd > caps.specht_cap)
        throw ScaleExceeded("specht_rep_straightened: Specht dimension exceeds cap");
    const int m = static_cast<int>(sd.get_ui());

    Straightener st(mu, p);
    const FieldCtx& F = FieldCtx::get(p, 1);
    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = m;
    rep.label = "S^(" + mu.str() + ")";
    for (const auto& g : gens) {
        MatrixF G(F, m, m);
        for (int c = 0; c < m; ++c) {
            Tableau moved = specht::act(g, st.standard_basis()[c]);
            for (const auto& [idx, coeff] : st.straighten(moved)) G.at(idx, c) = F.from_int(coeff);
        }
        rep.dense.push_back(std::move(G));
    }
    rep.validate();
    return rep;
}

RepE specht_rep_wedge(const Partition& mu, int p, int s, const Caps& caps) {
    if (s < 1) throw std::invalid_argument("specht_rep_wedge: s must be >= 1");
    if (!mu.is_hook()) throw std::invalid_argument("specht_rep_wedge: hook partitions only");
    const int n = mu.n();
    if (n > 10) throw ScaleExceeded("specht_rep_wedge: n > 10");
    if (n < 1) throw std::invalid_argument("specht_rep_wedge: empty partition");
    const int b = mu.hook_leg();
    auto gens = e_generators(n, s, p);
    const FieldCtx& F = FieldCtx::get(p, 1);

    // Natural (n-1)-dimensional module on f_k = x_(k+2) - x_1.
    std::vector<MatrixF> nat;
    for (const auto& g : gens) {
        MatrixF G(F, n - 1, n - 1);
        for (int j = 0; j < n - 1; ++j) {
            int imgk = g(j + 1);  // image of value k = j+2, 0-based point j+1
            int img1 = g(0);
            if (imgk != 0) G.at(imgk - 1, j) = F.add(G.at(imgk - 1, j), F.one());
            if (img1 != 0) G.at(img1 - 1, j) = F.sub(G.at(img1 - 1, j), F.one());
        }
        nat.push_back(std::move(G));
    }

    // b-subsets of {0..n-2}, lexicographic.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == b) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v < n - 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    const int m = static_cast<int>(subsets.size());
    if (m > caps.specht_cap) throw ScaleExceeded("specht_rep_wedge: dimension exceeds cap");
    if (!(specht_dimension(mu) == BigInt(m)))
        throw std::logic_error("specht_rep_wedge: dimension mismatch with hook formula");

    // det of the (rows, cols) minor over GF(p)
    auto minor_det = [&](const MatrixF& g, const std::vector<int>& rows,
                         const std::vector<int>& cols) -> Fq {
        int k = static_cast<int>(rows.size());
        MatrixF sub(F, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = g.at(rows[i], cols[j]);
        Fq det = F.one();
        for (int c = 0; c < k; ++c) {
            int pr = -1;
            for (int r = c; r < k; ++r)
                if (!F.is_zero(sub.at(r, c))) {
                    pr = r;
                    break;
                }
            if (pr < 0) return F.zero();
            if (pr != c) {
                for (int j = c; j < k; ++j) std::swap(sub.at(pr, j), sub.at(c, j));
                det = F.neg(det);
            }
            det = F.mul(det, sub.at(c, c));
            Fq inv = F.inv(sub.at(c, c));
            for (int r = c + 1; r < k; ++r) {
                Fq f = F.mul(sub.at(r, c), inv);
                row_axmy(F, sub.row(r) + c, sub.row(c) + c, f, k - c);
            }
        }
        return det;
    };

    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = m;
    rep.label = "S^(" + mu.str() + ")";
    for (const auto& g : nat) {
        MatrixF W(F, m, m);
        for (int rI = 0; rI < m; ++rI)
            for (int cI = 0; cI < m; ++cI) W.at(rI, cI) = minor_det(g, subsets[rI], subsets[cI]);
        rep.dense.push_back(std::move(W));
    }
    rep.validate();
    return rep;
}

RepE specht_rep(const Partition& mu, int p, int s, const std::string& backend, const Caps& caps) {
    if (backend == "ambient") return specht_rep_ambient(mu, p, s, caps);
    if (backend == "straight") return specht_rep_straightened(mu, p, s, caps);
    if (backend == "wedge") return specht_rep_wedge(mu, p, s, caps);
    if (backend == "auto") {
        BigInt ambient = multinomial(std::vector<int>(mu.parts().begin(), mu.parts().end()));
        if (ambient <= 10'000 && ambient <= caps.ambient_cap)
            return specht_rep_ambient(mu, p, s, caps);
        return specht_rep_straightened(mu, p, s, caps);
    }
    throw std::invalid_argument("specht_rep: unknown backend '" + backend + "'");
}

RepE signed_perm_rep(const Partition& alpha, const Partition& beta, int p, int s, const Caps& caps) {
    if (s < 1) throw std::invalid_argument("signed_perm_rep: s must be >= 1");
    Composition shape(alpha.parts().begin(), alpha.parts().end());
    shape.insert(shape.end(), beta.parts().begin(), beta.parts().end());
    const int n = alpha.n() + beta.n();
    const int m = alpha.rows();
    auto gens = e_generators(n, s, p);
    WordSpace ws(shape, caps.ambient_cap);

    RepE rep;
    rep.p = p;
    rep.s = s;
    rep.dim = static_cast<int>(ws.dim());
    rep.label = "M(" + alpha.str() + "|" + beta.str() + ")";

    std::vector<uint8_t> img(n);
    std::vector<int> rowlist;
    for (const auto& g : gens) {
        MonomialGen mg;
        mg.perm.resize(ws.dim());
        mg.sign.resize(ws.dim());
        for (uint64_t idx = 0; idx < ws.dim(); ++idx) {
            std::vector<uint8_t> w = ws.unrank(idx);
            for (int v = 0; v < n; ++v) img[g(v)] = w[v];
            mg.perm[idx] = static_cast<int32_t>(ws.rank(img));
            // Sign: product over beta rows of the parity that re-sorts the
            // image of the ascending row.
            int sign = 1;
            for (size_t r = m; r < shape.size(); ++r) {
                rowlist.clear();
                for (int v = 0; v < n; ++v)
                    if (w[v] == static_cast<uint8_t>(r)) rowlist.push_back(g(v));
                for (size_t i = 0; i < rowlist.size(); ++i)
                    for (size_t j = i + 1; j < rowlist.size(); ++j)
                        if (rowlist[i] > rowlist[j]) sign = -sign;
            }
            mg.sign[idx] = reduce_sign(sign, p);
        }
        rep.mono.push_back(std::move(mg));
    }
    finish_monomial(rep);
    return rep;
}

RepE direct_sum(const RepE& a, const RepE& b) {
    if (a.p != b.p || a.s != b.s) throw std::invalid_argument("direct_sum: parameter mismatch");
    if (a.basis || b.basis)
        throw std::invalid_argument("direct_sum: subspace-restricted summands are not supported");
    RepE rep;
    rep.p = a.p;
    rep.s = a.s;
    rep.dim = a.dim + b.dim;
    rep.label = a.label + " + " + b.label;
    if (a.is_monomial() && b.is_monomial()) {
        for (int i = 0; i < a.s; ++i) {
            MonomialGen g;
            g.perm.reserve(rep.dim);
            g.sign.reserve(rep.dim);
            const MonomialGen& ga = a.mono[i];
            for (int j = 0; j < a.dim; ++j) {
                g.perm.push_back(ga.perm[j]);
                g.sign.push_back(ga.sign[j]);
            }
            const MonomialGen& gb = b.mono[i];
            for (int j = 0; j < b.dim; ++j) {
                g.perm.push_back(gb.perm[j] + a.dim);
                g.sign.push_back(gb.sign[j]);
            }
            rep.mono.push_back(std::move(g));
        }
        finish_monomial(rep);
        return rep;
    }
    // Dense block-diagonal; monomial summands are densified.
    const FieldCtx& F = FieldCtx::get(rep.p, 1);
    auto densify = [&](const RepE& r, int gen) -> MatrixF {
        if (!r.is_monomial()) return r.dense[gen];
        MatrixF g(F, r.dim, r.dim);
        for (int j = 0; j < r.dim; ++j)
            g.at(r.mono[gen].perm[j], j) = F.from_int(r.mono[gen].sign[j]);
        return g;
    };
    for (int i = 0; i < rep.s; ++i) {
        MatrixF g(F, rep.dim, rep.dim);
        MatrixF ga = densify(a, i), gb = densify(b, i);
        for (int r = 0; r < a.dim; ++r)
            for (int c = 0; c < a.dim; ++c) g.at(r, c) = ga.at(r, c);
        for (int r = 0; r < b.dim; ++r)
            for (int c = 0; c < b.dim; ++c) g.at(a.dim + r, a.dim + c) = gb.at(r, c);
        rep.dense.push_back(std::move(g));
    }
    rep.validate();
    return rep;
}

PointOnE sample_point(const FieldCtx& F, int s, uint64_t sample_seed) {
    SplitRng rng = SplitRng::keyed(sample_seed, 0);
    PointOnE pt;
    pt.F = &F;
    pt.seed = sample_seed;
    pt.coords.reserve(s);
    for (int i = 0; i < s; ++i) pt.coords.push_back(F.random_nonzero(rng));
    return pt;
}

namespace {

void check_point(const RepE& rep, const PointOnE& pt) {
    if (static_cast<int>(pt.coords.size()) != rep.s)
        throw std::invalid_argument("point has wrong number of coordinates");
    if (pt.F->p() != rep.p) throw std::invalid_argument("point lives over the wrong characteristic");
    bool nonzero = false;
    for (const auto& c : pt.coords)
        if (!pt.F->is_zero(c)) nonzero = true;
    if (!nonzero && rep.s > 0) throw std::invalid_argument("point must be nonzero");
}

// out = (U - I) * M for a monomial rep; M over pt's field.
MatrixF apply_nilpotent(const RepE& rep, const PointOnE& pt, const MatrixF& m) {
    const FieldCtx& F = *pt.F;
    MatrixF out(F, m.rows(), m.cols());
    for (int i = 0; i < rep.s; ++i) {
        const MonomialGen& g = rep.mono[i];
        const Fq& a = pt.coords[i];
        if (F.is_zero(a)) continue;
        for (int j = 0; j < m.rows(); ++j) {
            if (g.perm[j] == j && g.sign[j] == 1) continue;  // fixed vector
            Fq coef = F.mul(a, F.from_int(g.sign[j]));
            row_axpy(F, out.row(g.perm[j]), m.row(j), coef, m.cols());
            row_axmy(F, out.row(j), m.row(j), a, m.cols());
        }
    }
    return out;
}

// Dense N = sum alpha_i (G_i - I) restricted to one orbit block.
MatrixF block_nilpotent(const RepE& rep, const PointOnE& pt, const std::vector<int32_t>& block,
                        const std::vector<int32_t>& loc) {
    const FieldCtx& F = *pt.F;
    const int k = static_cast<int>(block.size());
    MatrixF n(F, k, k);
    for (int i = 0; i < rep.s; ++i) {
        const MonomialGen& g = rep.mono[i];
        const Fq& a = pt.coords[i];
        for (int c = 0; c < k; ++c) {
            int32_t j = block[c];
            Fq coef = F.mul(a, F.from_int(g.sign[j]));
            int target = loc[g.perm[j]];
            n.at(target, c) = F.add(n.at(target, c), coef);
            n.at(c, c) = F.sub(n.at(c, c), a);
        }
    }
    return n;
}

RankSequence ranks_monomial_blocks(const RepE& rep, const PointOnE& pt) {
    const int p = rep.p;
    RankSequence rs;
    rs.r.assign(p + 1, 0);
    rs.r[0] = rep.dim;
    std::vector<int32_t> loc(rep.ambient_dim(), -1);
    for (const auto& block : rep.orbits) {
        for (size_t i = 0; i < block.size(); ++i) loc[block[i]] = static_cast<int32_t>(i);
        MatrixF n = block_nilpotent(rep, pt, block, loc);
        MatrixF m = n;
        for (int i = 1; i <= p; ++i) {
            int rk = rank(m);
            rs.r[i] += rk;
            if (rk == 0) break;
            if (i < p) m = mat_mul(m, n);
        }
    }
    rs.validate();
    return rs;
}

RankSequence ranks_ambient_restricted(const RepE& rep, const PointOnE& pt) {
    const FieldCtx& F = *pt.F;
    const int p = rep.p;
    RankSequence rs;
    rs.r.assign(p + 1, 0);
    rs.r[0] = rep.dim;
    MatrixF m = rep.basis->lift(F);
    for (int i = 1; i <= p; ++i) {
        m = apply_nilpotent(rep, pt, m);
        rs.r[i] = (i == p && is_zero_matrix(m)) ? 0 : rank(m);
    }
    if (rs.r[p] != 0) throw std::logic_error("rank_sequence: (U-I)^p is nonzero on " + rep.label);
    rs.validate();
    return rs;
}

RankSequence ranks_dense(const RepE& rep, const PointOnE& pt) {
    const FieldCtx& F = *pt.F;
    const int p = rep.p;
    MatrixF n(F, rep.dim, rep.dim);
    for (int i = 0; i < rep.s; ++i) {
        const Fq& a = pt.coords[i];
        for (int r = 0; r < rep.dim; ++r)
            for (int c = 0; c < rep.dim; ++c) {
                Fq gij = rep.dense[i].at(r, c);
                if (r == c) gij = F.sub(gij, F.one());
                if (!F.is_zero(gij)) n.at(r, c) = F.add(n.at(r, c), F.mul(a, gij));
            }
    }
    RankSequence rs;
    rs.r.assign(p + 1, 0);
    rs.r[0] = rep.dim;
    MatrixF m = n;
    for (int i = 1; i <= p; ++i) {
        rs.r[i] = rank(m);
        if (i < p && rs.r[i] > 0) m = mat_mul(m, n);
    }
    rs.validate();
    return rs;
}

}  // namespace

MatrixF u_alpha_matrix(const RepE& rep, const PointOnE& pt) {
    check_point(rep, pt);
    const FieldCtx& F = *pt.F;
    const int adim = rep.ambient_dim();
    if (static_cast<long>(adim) * adim > 16'000'000)
        throw ScaleExceeded("u_alpha_matrix: dense operator too large");
    MatrixF u = MatrixF::identity(F, adim);
    if (rep.is_monomial()) {
        for (int i = 0; i < rep.s; ++i) {
            const MonomialGen& g = rep.mono[i];
            const Fq& a = pt.coords[i];
            for (int j = 0; j < adim; ++j) {
                Fq coef = F.mul(a, F.from_int(g.sign[j]));
                u.at(g.perm[j], j) = F.add(u.at(g.perm[j], j), coef);
                u.at(j, j) = F.sub(u.at(j, j), a);
            }
        }
    } else {
        for (int i = 0; i < rep.s; ++i) {
            const Fq& a = pt.coords[i];
            for (int r = 0; r < adim; ++r)
                for (int c = 0; c < adim; ++c) {
                    Fq gij = rep.dense[i].at(r, c);
                    if (r == c) gij = F.sub(gij, F.one());
                    if (!F.is_zero(gij)) u.at(r, c) = F.add(u.at(r, c), F.mul(a, gij));
                }
        }
    }
    return u;
}

RankSequence rank_sequence_at(const RepE& rep, const PointOnE& pt) {
    check_point(rep, pt);
    if (rep.dim == 0) {
        RankSequence rs;
        rs.r.assign(rep.p + 1, 0);
        return rs;
    }
    if (rep.basis) return ranks_ambient_restricted(rep, pt);
    if (rep.is_monomial()) return ranks_monomial_blocks(rep, pt);
    return ranks_dense(rep, pt);
}

JordanType jordan_at_point(const RepE& rep, const PointOnE& pt) {
    RankSequence rs = rank_sequence_at(rep, pt);
    if (rep.dim == 0) {
        JordanType jt;
        jt.counts.assign(rep.p, 0);
        return jt;
    }
    return jordan_from_ranks(rs);
}

GenericTypeReport generic_jordan_type(const RepE& rep, int samples, int ext, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("generic_jordan_type: samples must be >= 1");
    const FieldCtx& F = FieldCtx::get(rep.p, ext);
    GenericTypeReport rep_out;
    rep_out.samples = samples;
    std::vector<RankSequence> seqs;
    seqs.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        uint64_t sample_seed = SplitRng::mix(seed ^ (0x51ED2700F7A1C2B3ULL * (k + 1)));
        rep_out.seeds.push_back(sample_seed);
        PointOnE pt = sample_point(F, rep.s, sample_seed);
        seqs.push_back(rank_sequence_at(rep, pt));
    }
    auto [mx, attained] = dominance_max(seqs);
    rep_out.max_seq = mx;
    rep_out.attained_by_single_sample = attained;
    rep_out.sample_seqs = seqs;
    if (rep.dim == 0) {
        rep_out.jordan.counts.assign(rep.p, 0);
    } else {
        rep_out.jordan = jordan_from_ranks(mx);
    }
    rep_out.stable = rep_out.jordan.stable();
    return rep_out;
}

bool is_generically_free(const RepE& rep, int samples, int ext, uint64_t seed) {
    if (rep.dim % rep.p != 0) return false;
    return generic_jordan_type(rep, samples, ext, seed).stable.is_empty();
}

}  // namespace specht
