#pragma once

#include <vector>

namespace specht {

// Permutation of {0, ..., n-1}, stored as the image vector.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // Cycle (c[0] c[1] ... c[k-1]) inside the identity on n points (0-based).
    static Perm cycle(int n, const std::vector<int>& cyc);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    // (a.then(b))(x) = b(a(x))
    Perm then(const Perm& b) const;
    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    bool operator==(const Perm&) const = default;

  private:
    std::vector<int> img_;
};

// Disjoint p-cycles g_i = ((i-1)p, ..., ip-1) for i = 1..s, acting on
// {0, ..., n-1}.  Throws std::invalid_argument when s*p > n.
std::vector<Perm> disjoint_p_cycles(int n, int s, int p);

}  // namespace specht
