#pragma once

#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

// A permutation group on {0..degree-1} with its element list held explicitly.
// elements is closed under composition, deduplicated and sorted by image
// sequence; every generator appears among the elements.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;

    int order() const { return static_cast<int>(elements.size()); }
};

PermGroup closure(int degree, std::vector<Perm> generators);
bool contains(const PermGroup& g, const Perm& p);
bool is_abelian(const PermGroup& g);

// Conjugacy classes, each sorted by image sequence (so the representative is
// the class minimum and sits at the front); classes ordered by representative.
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

// Subgroup of elements commuting with p.  Errors if p is not in g.
PermGroup centralizer(const PermGroup& g, const Perm& p);

// The symmetric group on {0..n-1}.
PermGroup symmetric_group(int n);

// A pair of permutations acting componentwise; ordered lexicographically.
struct PermPair {
    Perm left, right;

    friend bool operator==(const PermPair& a, const PermPair& b) = default;
    friend auto operator<=>(const PermPair& a, const PermPair& b) = default;
};

inline PermPair compose(const PermPair& a, const PermPair& b) {
    return PermPair{compose(a.left, b.left), compose(a.right, b.right)};
}

// A subgroup of S(X) x S(X) with explicit elements, as above.
struct PermPairGroup {
    int degree = 0;
    std::vector<PermPair> generators;
    std::vector<PermPair> elements;

    int order() const { return static_cast<int>(elements.size()); }
};

PermPairGroup pair_closure(int degree, std::vector<PermPair> generators);
bool is_abelian(const PermPairGroup& g);

} // namespace ybe
