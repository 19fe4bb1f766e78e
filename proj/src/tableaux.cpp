#include "specht/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "specht/common.hpp"

namespace specht {

int composition_n(const Composition& shape) {
    int n = 0;
    for (int x : shape) {
        if (x <= 0) throw std::invalid_argument("Composition: rows must be positive");
        n += x;
    }
    return n;
}

Tableau::Tableau(Composition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    int n = composition_n(shape_);
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("Tableau: entry count does not match shape");
    std::vector<char> seen(n + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Tableau: entries must be a bijection onto 1..n");
        seen[v] = 1;
    }
    offsets_.resize(shape_.size());
    int off = 0;
    for (size_t i = 0; i < shape_.size(); ++i) {
        offsets_[i] = off;
        off += shape_[i];
    }
}

int Tableau::col_height(int j) const {
    int h = 0;
    for (int len : shape_)
        if (len > j) ++h;
    return h;
}

bool Tableau::is_standard() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 1; j < row_len(i); ++j)
            if (at(i, j - 1) >= at(i, j)) return false;
    int cols = shape_.empty() ? 0 : *std::max_element(shape_.begin(), shape_.end());
    for (int j = 0; j < cols; ++j) {
        int h = col_height(j);
        for (int i = 1; i < h; ++i) {
            // Columns of a composition shape may be ragged; only compare
            // consecutive rows that both reach column j.
            if (row_len(i - 1) > j && row_len(i) > j && at(i - 1, j) >= at(i, j)) return false;
        }
    }
    return true;
}

std::string Tableau::str() const {
    std::string out;
    for (int i = 0; i < rows(); ++i) {
        if (i) out += ';';
        for (int j = 0; j < row_len(i); ++j) {
            if (j) out += ',';
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

Tableau row_filling(const Composition& shape) {
    int n = composition_n(shape);
    std::vector<int> entries(n);
    std::iota(entries.begin(), entries.end(), 1);
    return Tableau(shape, std::move(entries));
}

Tableau act(const Perm& g, const Tableau& t) {
    std::vector<int> entries(t.entries());
    for (int& v : entries) v = g(v - 1) + 1;
    return Tableau(t.shape(), std::move(entries));
}

Tabloid Tabloid::of(const Tableau& t) {
    std::vector<std::vector<int>> rows(t.rows());
    for (int i = 0; i < t.rows(); ++i) {
        rows[i].reserve(t.row_len(i));
        for (int j = 0; j < t.row_len(i); ++j) rows[i].push_back(t.at(i, j));
        std::sort(rows[i].begin(), rows[i].end());
    }
    Tabloid x;
    x.shape_ = t.shape();
    x.rows_ = std::move(rows);
    return x;
}

Tabloid Tabloid::from_rows(Composition shape, std::vector<std::vector<int>> rows) {
    int n = composition_n(shape);
    if (rows.size() != shape.size()) throw std::invalid_argument("Tabloid: row count mismatch");
    std::vector<char> seen(n + 1, 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape[i])
            throw std::invalid_argument("Tabloid: row size mismatch");
        for (int v : rows[i]) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("Tabloid: rows must partition 1..n");
            seen[v] = 1;
        }
        std::sort(rows[i].begin(), rows[i].end());
    }
    Tabloid x;
    x.shape_ = std::move(shape);
    x.rows_ = std::move(rows);
    return x;
}

std::string Tabloid::str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ';';
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

Tabloid act(const Perm& g, const Tabloid& x) {
    std::vector<std::vector<int>> rows = x.rows();
    for (auto& row : rows) {
        for (int& v : row) v = g(v - 1) + 1;
        std::sort(row.begin(), row.end());
    }
    return Tabloid::from_rows(x.shape(), std::move(rows));
}

std::vector<Tableau> enumerate_standard(const Partition& mu, long cap) {
    if (specht_dimension(mu) > cap) throw ScaleExceeded("enumerate_standard: dimension exceeds cap");
    const int n = mu.n();
    const int nrows = mu.rows();
    std::vector<int> filled(nrows, 0);
    std::vector<int> entries(n, 0);
    std::vector<Tableau> out;
    // Place values 1..n left to right; prefixes must stay a Young diagram.
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            std::vector<int> flat;
            flat.reserve(n);
            int off = 0;
            for (int i = 0; i < nrows; ++i) {
                for (int j = 0; j < mu.part(i); ++j) flat.push_back(entries[off + j]);
                off += mu.part(i);
            }
            out.emplace_back(mu.parts(), std::move(flat));
            return;
        }
        int off = 0;
        for (int i = 0; i < nrows; ++i) {
            if (filled[i] < mu.part(i) && (i == 0 || filled[i - 1] > filled[i])) {
                entries[off + filled[i]] = v;
                ++filled[i];
                self(self, v + 1);
                --filled[i];
            }
            off += mu.part(i);
        }
    };
    if (n == 0) {
        out.emplace_back(Composition{}, std::vector<int>{});
        return out;
    }
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tabloid> enumerate_tabloids(const Composition& shape, long cap) {
    WordSpace ws(shape, static_cast<uint64_t>(cap));
    std::vector<Tabloid> out;
    out.reserve(ws.dim());
    for (uint64_t i = 0; i < ws.dim(); ++i) out.push_back(tabloid_of_word(shape, ws.unrank(i)));
    std::sort(out.begin(), out.end());
    return out;
}

WordSpace::WordSpace(Composition shape, uint64_t cap) : shape_(std::move(shape)) {
    n_ = composition_n(shape_);
    if (n_ > 20) throw ScaleExceeded("WordSpace: n > 20");
    BigInt dim = multinomial(std::vector<int>(shape_.begin(), shape_.end()));
    if (dim > BigInt(static_cast<unsigned long>(cap)))
        throw ScaleExceeded("WordSpace: tabloid space dimension " + dim.get_str() +
                            " exceeds cap " + std::to_string(cap));
    dim_ = dim.get_ui();
}

uint64_t WordSpace::rank(const std::vector<uint8_t>& word) const {
    Composition counts = shape_;
    uint64_t m = dim_;
    uint64_t acc = 0;
    int rem = n_;
    for (int v = 0; v < n_; ++v) {
        int row = word[v];
        for (int r = 0; r < row; ++r)
            if (counts[r] > 0) acc += m * counts[r] / rem;
        m = m * counts[row] / rem;
        --counts[row];
        --rem;
    }
    return acc;
}

std::vector<uint8_t> WordSpace::unrank(uint64_t idx) const {
    Composition counts = shape_;
    uint64_t m = dim_;
    int rem = n_;
    std::vector<uint8_t> word(n_);
    for (int v = 0; v < n_; ++v) {
        for (int r = 0; r < rows(); ++r) {
            if (counts[r] == 0) continue;
            uint64_t cnt = m * counts[r] / rem;
            if (idx < cnt) {
                word[v] = static_cast<uint8_t>(r);
                m = cnt;
                --counts[r];
                break;
            }
            idx -= cnt;
        }
        --rem;
    }
    return word;
}

std::vector<uint8_t> word_of(const Tabloid& x) {
    int n = composition_n(x.shape());
    std::vector<uint8_t> word(n);
    for (size_t i = 0; i < x.rows().size(); ++i)
        for (int v : x.rows()[i]) word[v - 1] = static_cast<uint8_t>(i);
    return word;
}

Tabloid tabloid_of_word(const Composition& shape, const std::vector<uint8_t>& word) {
    std::vector<std::vector<int>> rows(shape.size());
    for (size_t v = 0; v < word.size(); ++v) rows[word[v]].push_back(static_cast<int>(v) + 1);
    return Tabloid::from_rows(shape, std::move(rows));
}

namespace {

int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

void for_each_polytabloid_term(const Tableau& t,
                               const std::function<void(const std::vector<uint8_t>&, int)>& fn,
                               long cap) {
    const int n = t.n();
    int cols = 0;
    for (int len : t.shape()) cols = std::max(cols, len);

    // Column value lists.
    std::vector<std::vector<int>> colvals(cols);
    long group = 1;
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < t.rows(); ++i)
            if (t.row_len(i) > j) colvals[j].push_back(t.at(i, j));
        for (size_t k = 2; k <= colvals[j].size(); ++k) {
            group *= static_cast<long>(k);
            if (group > cap) throw ScaleExceeded("polytabloid: column stabilizer exceeds cap");
        }
    }

    std::vector<uint8_t> word(n);
    // Row index of each cell, column-major fill.
    auto place_column = [&](int j, const std::vector<int>& arr) {
        int r = 0;
        for (int i = 0; i < t.rows(); ++i) {
            if (t.row_len(i) > j) {
                word[arr[r] - 1] = static_cast<uint8_t>(i);
                ++r;
            }
        }
    };

    auto rec = [&](auto&& self, int j, int sign) -> void {
        if (j == cols) {
            fn(word, sign);
            return;
        }
        std::vector<int> arr = colvals[j];
        std::sort(arr.begin(), arr.end());
        int base = inversion_sign(colvals[j]);  // sorted -> original column order
        do {
            place_column(j, arr);
            self(self, j + 1, sign * base * inversion_sign(arr));
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    rec(rec, 0, 1);
}

PolytabloidVector polytabloid(const Tableau& t, long cap) {
    PolytabloidVector v;
    for_each_polytabloid_term(
        t,
        [&](const std::vector<uint8_t>& word, int sign) {
            v.terms[tabloid_of_word(t.shape(), word)] = sign;
        },
        cap);
    return v;
}

int column_sort(Tableau& t) {
    int cols = 0;
    for (int len : t.shape()) cols = std::max(cols, len);
    int sign = 1;
    std::vector<int> vals;
    for (int j = 0; j < cols; ++j) {
        vals.clear();
        for (int i = 0; i < t.rows(); ++i)
            if (t.row_len(i) > j) vals.push_back(t.at(i, j));
        sign *= inversion_sign(vals);
        std::sort(vals.begin(), vals.end());
        int r = 0;
        for (int i = 0; i < t.rows(); ++i)
            if (t.row_len(i) > j) t.at(i, j) = vals[r++];
    }
    return sign;
}

Straightener::Straightener(const Partition& mu, int p, long node_cap)
    : mu_(mu), p_(p), node_cap_(node_cap) {
    basis_ = enumerate_standard(mu);
    for (size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i].entries()] = static_cast<int>(i);
}

std::map<int, int> Straightener::straighten(const Tableau& t) {
    if (!(Partition::make(std::vector<int>(t.shape().begin(), t.shape().end())) == mu_))
        throw std::invalid_argument("Straightener: shape mismatch");
    Tableau s = t;
    int sign = column_sort(s);
    std::map<int, int> coeffs = straighten_sorted(s);
    if (sign == -1) {
        for (auto& [idx, c] : coeffs) c = (p_ - c) % p_;
    }
    return coeffs;
}

std::map<int, int> Straightener::straighten_sorted(const Tableau& t) {
    auto hit = memo_.find(t.entries());
    if (hit != memo_.end()) return hit->second;
    if (++nodes_ > node_cap_) throw ScaleExceeded("Straightener: node cap exceeded");

    // Columns are sorted; find the leftmost/topmost row violation.
    int vi = -1, vj = -1;
    int cols = 0;
    for (int len : t.shape()) cols = std::max(cols, len);
    for (int j = 0; j + 1 < cols && vj < 0; ++j) {
        int h = t.col_height(j + 1);
        for (int i = 0; i < h; ++i) {
            if (t.at(i, j) > t.at(i, j + 1)) {
                vi = i;
                vj = j;
                break;
            }
        }
    }

    std::map<int, int> result;
    if (vj < 0) {
        // Standard.
        result[basis_index_.at(t.entries())] = 1 % p_;
        memo_[t.entries()] = result;
        return result;
    }

    // Garnir move on A = column vj rows vi.., B = column vj+1 rows ..vi.
    const int hA = t.col_height(vj);
    std::vector<int> aval, bval;
    for (int i = vi; i < hA; ++i) aval.push_back(t.at(i, vj));
    for (int i = 0; i <= vi; ++i) bval.push_back(t.at(i, vj + 1));
    std::vector<int> all = aval;
    all.insert(all.end(), bval.begin(), bval.end());
    std::vector<int> sorted_all = all;
    std::sort(sorted_all.begin(), sorted_all.end());

    const size_t ka = aval.size();
    std::vector<int> pick(sorted_all.size(), 0);
    std::fill(pick.begin(), pick.begin() + ka, 1);
    std::sort(pick.begin(), pick.end());  // lexicographic subset masks via next_permutation

    do {
        std::vector<int> new_a, new_b;
        for (size_t i = 0; i < sorted_all.size(); ++i)
            (pick[i] ? new_a : new_b).push_back(sorted_all[i]);
        if (new_a == aval) continue;  // identity coset

        // Sign of the rearrangement relative to the cell order (A then B).
        std::vector<int> l_new = new_a;
        l_new.insert(l_new.end(), new_b.begin(), new_b.end());
        std::vector<int> pos(t.n() + 1, 0);
        for (size_t i = 0; i < all.size(); ++i) pos[all[i]] = static_cast<int>(i);
        std::vector<int> q(all.size());
        for (size_t i = 0; i < all.size(); ++i) q[i] = pos[l_new[i]];
        int sgn = inversion_sign(q);

        Tableau u = t;
        for (int i = vi; i < hA; ++i) u.at(i, vj) = new_a[i - vi];
        for (int i = 0; i <= vi; ++i) u.at(i, vj + 1) = new_b[i];
        int usign = column_sort(u);
        std::map<int, int> sub = straighten_sorted(u);
        // e_t = -sum_{sigma != id} sgn(sigma) e_{sigma t}
        int factor = ((-sgn * usign) % p_ + p_) % p_;
        for (const auto& [idx, c] : sub) {
            int& slot = result[idx];
            slot = (slot + factor * c) % p_;
        }
    } while (std::next_permutation(pick.begin(), pick.end()));

    for (auto it = result.begin(); it != result.end();) {
        if (it->second == 0)
            it = result.erase(it);
        else
            ++it;
    }
    memo_[t.entries()] = result;
    return result;
}

std::map<Tableau, int> garnir_straighten(const Tableau& t, int p) {
    Partition mu = Partition::make(std::vector<int>(t.shape().begin(), t.shape().end()));
    Straightener st(mu, p);
    std::map<Tableau, int> out;
    for (const auto& [idx, c] : st.straighten(t)) out.emplace(st.standard_basis()[idx], c);
    return out;
}

}  // namespace specht
