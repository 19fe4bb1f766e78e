#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "specht/partition.hpp"
#include "specht/permutation.hpp"

namespace specht {

// Row lengths; unlike a partition these need not decrease (a signed shape
// concatenates two partitions).
using Composition = std::vector<int>;

int composition_n(const Composition& shape);

// Filling of a Young diagram with 1..n, stored row-major.
class Tableau {
  public:
    Tableau(Composition shape, std::vector<int> entries);

    const Composition& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    int n() const { return static_cast<int>(entries_.size()); }
    int rows() const { return static_cast<int>(shape_.size()); }
    int row_len(int i) const { return shape_[i]; }
    int at(int i, int j) const { return entries_[offsets_[i] + j]; }
    int& at(int i, int j) { return entries_[offsets_[i] + j]; }

    // Height of column j.
    int col_height(int j) const;

    bool is_standard() const;
    std::string str() const;  // "1,3;2"

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& o) const { return entries_ < o.entries_; }

  private:
    Composition shape_;
    std::vector<int> entries_;
    std::vector<int> offsets_;
};

// Row-major filling 1..n.
Tableau row_filling(const Composition& shape);
// Relabel entries through g (0-based permutation on values-1).
Tableau act(const Perm& g, const Tableau& t);

// Row-equivalence class of tableaux; rows stored sorted ascending.
class Tabloid {
  public:
    static Tabloid of(const Tableau& t);
    static Tabloid from_rows(Composition shape, std::vector<std::vector<int>> rows);

    const Composition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::string str() const;

    bool operator==(const Tabloid&) const = default;
    // Lexicographic on row-sorted contents.
    bool operator<(const Tabloid& o) const { return rows_ < o.rows_; }

  private:
    Composition shape_;
    std::vector<std::vector<int>> rows_;
};

Tabloid act(const Perm& g, const Tabloid& x);

std::vector<Tableau> enumerate_standard(const Partition& mu, long cap = 1'000'000);
std::vector<Tabloid> enumerate_tabloids(const Composition& shape, long cap = 1'000'000);

// Compact tabloid encoding: word[v-1] = row of value v.  Basis indexing
// for the ambient permutation modules is the rank of the word among all
// words with the given row multiplicities.
class WordSpace {
  public:
    WordSpace(Composition shape, uint64_t cap);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(shape_.size()); }
    const Composition& shape() const { return shape_; }
    uint64_t dim() const { return dim_; }

    uint64_t rank(const std::vector<uint8_t>& word) const;
    std::vector<uint8_t> unrank(uint64_t idx) const;

  private:
    Composition shape_;
    int n_ = 0;
    uint64_t dim_ = 0;
};

std::vector<uint8_t> word_of(const Tabloid& x);
Tabloid tabloid_of_word(const Composition& shape, const std::vector<uint8_t>& word);

// Signed sum over the column stabilizer; coefficients are exactly +-1.
struct PolytabloidVector {
    std::map<Tabloid, int> terms;
};

PolytabloidVector polytabloid(const Tableau& t, long cap = 500'000);

// Visits every term {sigma t} of the polytabloid as (word, sign) without
// materializing tabloids; used to build ambient basis matrices.
void for_each_polytabloid_term(const Tableau& t,
                               const std::function<void(const std::vector<uint8_t>&, int)>& fn,
                               long cap = 2'000'000);

// Garnir straightening of polytabloids into the standard basis, mod p.
// One instance per shape; results are memoized across calls.
class Straightener {
  public:
    Straightener(const Partition& mu, int p, long node_cap = 4'000'000);

    const Partition& mu() const { return mu_; }
    const std::vector<Tableau>& standard_basis() const { return basis_; }

    // Coefficients c with e_t = sum c_s e_s, keyed by basis index.
    std::map<int, int> straighten(const Tableau& t);

  private:
    std::map<int, int> straighten_sorted(const Tableau& t);

    Partition mu_;
    int p_;
    long node_cap_;
    long nodes_ = 0;
    std::vector<Tableau> basis_;
    std::map<std::vector<int>, int> basis_index_;
    std::map<std::vector<int>, std::map<int, int>> memo_;
};

// Convenience form returning tableau keys; coefficients in [0, p).
std::map<Tableau, int> garnir_straighten(const Tableau& t, int p);

// Sorts each column ascending in place; returns the sign of the sorting
// permutation (product over columns).
int column_sort(Tableau& t);

}  // namespace specht
