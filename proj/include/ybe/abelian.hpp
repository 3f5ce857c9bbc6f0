#pragma once

#include <vector>

namespace ybe {

// A finite abelian group as a product of cyclic factors of prime-power order
// (invariant under reordering; factors kept sorted ascending).  Elements are
// identified with mixed-radix indices in [0, order): index 0 is the identity,
// the component for factors[0] cycles fastest, and decode() returns the
// residue tuple in factor order.
struct AbelianGroup {
    std::vector<int> factors;
    int order = 1;

    explicit AbelianGroup(std::vector<int> fs = {});

    std::vector<int> decode(int e) const;
    int encode(const std::vector<int>& tuple) const;
    int add(int a, int b) const;
    int neg(int a) const;

    // Size of the subgroup generated by the given element indices.
    int subgroup_order(const std::vector<int>& gens) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) = default;
};

// One representative per isomorphism class of abelian groups of order m,
// sorted by factor list.  abelian_groups(1) = { trivial }.
std::vector<AbelianGroup> abelian_groups(int m);

} // namespace ybe
