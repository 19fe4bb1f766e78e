#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specht/bigint.hpp"

namespace specht {

// Integer partition: weakly decreasing positive parts.  The empty
// partition is legal and serializes as "-".
class Partition {
  public:
    Partition() = default;

    // Validates; throws std::invalid_argument on non-positive or
    // increasing parts.
    static Partition make(std::vector<int> parts);

    // Parse "5,1,1" or "-" (empty).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }

    bool is_hook() const;  // (a, 1^b); the empty partition counts as a hook
    int hook_arm() const;  // a (0 for the empty partition)
    int hook_leg() const;  // b

    std::vector<int> conjugate() const;
    int hook_length(int i, int j) const;  // 0-based cell

    std::string str() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// p-adic bookkeeping for a hook (a, 1^b):
//   a+b = d*p + r,  a = u*p + a0,  b = v*p + b0.
struct HookData {
    int a = 0, b = 0, p = 0;
    int d = 0, r = 0;
    int u = 0, a0 = 0;
    int v = 0, b0 = 0;

    // Throws std::invalid_argument when mu is not a hook.
    static HookData of(const Partition& mu, int p);
    Partition partition() const;
};

struct CoreWeight {
    Partition core;
    int weight = 0;
};

// Abacus (beta-number) computation of the p-core and p-weight.
CoreWeight p_core_weight(const Partition& mu, int p);

// Independent oracle: removes rim p-hooks from the Young diagram in all
// orders, asserts every terminal diagram coincides.  n <= 20.
CoreWeight rim_hook_oracle(const Partition& mu, int p);

// Number of standard mu-tableaux (hook-length formula).
BigInt specht_dimension(const Partition& mu);

// All hooks (a, 1^b) of n, a >= 1.
std::vector<Partition> hooks_of(int n);

// All partitions of n (lexicographically sorted).
std::vector<Partition> partitions_of(int n);

}  // namespace specht
