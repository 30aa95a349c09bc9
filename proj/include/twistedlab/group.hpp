#pragma once

#include <vector>

#include "twistedlab/errors.hpp"

namespace twistedlab {

/// Default ceiling on group order; the ambient algebra dimension is
/// |G|*dim(A), and exact elimination cost grows fast past desk scale.
inline constexpr int kDefaultGroupOrderCap = 64;

/// Finite group as a validated Cayley table. Elements are dense indices
/// 0..n-1; the identity need not be index 0 for user-supplied tables.
/// Immutable after construction.
class FiniteGroup {
public:
    /// Validates a full Cayley table: all n^3 associativity triples, a
    /// two-sided identity, and a two-sided inverse for every element.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  int order_cap = kDefaultGroupOrderCap);

    static FiniteGroup cyclic(int n, int order_cap = kDefaultGroupOrderCap);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                      int order_cap = kDefaultGroupOrderCap);
    /// Dihedral group of order 2n: indices 0..n-1 are rotations r^k,
    /// n..2n-1 are reflections s*r^(k-n).
    static FiniteGroup dihedral(int n, int order_cap = kDefaultGroupOrderCap);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
    int inv(int x) const { return inverses_[static_cast<std::size_t>(x)]; }

    /// Order of the cyclic subgroup generated by x.
    int element_order(int x) const;

    bool is_abelian() const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    std::vector<int> table_;  // row-major order_ x order_
    int identity_ = -1;
    std::vector<int> inverses_;
};

}  // namespace twistedlab
