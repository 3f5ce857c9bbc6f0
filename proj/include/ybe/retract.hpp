#pragma once

#include <optional>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// A partition of {0..n-1} into classes.  classes are sorted by their minimal
// member and each class lists its members ascending; class_of[x] is the index
// of x's class.
struct Partition {
    int n = 0;
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;

    int size() const { return static_cast<int>(classes.size()); }
};

// x ~ y iff sigma_x = sigma_y.
Partition sim_partition(const Solution& s);
// x ~ y iff tau_x = tau_y.
Partition backsim_partition(const Solution& s);
// x ~ y iff sigma_x = sigma_y and tau_x = tau_y (the retraction relation).
Partition approx_partition(const Solution& s);

// The quotient solution on the approx classes.  Well-definedness of the
// quotient tables is verified on every pair; a violation would contradict the
// congruence property and raises an internal error.  Requires check_braid.
Solution retraction(const Solution& s);

// Least k with |Ret^k(S)| = 1, or nullopt if the retraction chain reaches a
// fixpoint with more than one element (or exceeds cap).  The singleton
// solution has level 0.  cap < 0 means the default cap n.
std::optional<int> multipermutation_level(const Solution& s, int cap = -1);

// n > 1 and the retraction relation is the identity partition.
bool is_irretractable(const Solution& s);

} // namespace ybe
