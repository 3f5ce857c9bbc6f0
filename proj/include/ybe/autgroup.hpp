#pragma once

#include <optional>
#include <vector>

#include "ybe/perm_group.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Per-point invariant preserved by every isomorphism: cycle type of sigma_x,
// cycle type of tau_x, size of x's retraction class, and whether
// sigma_x(x) = x.  Encoded as a comparable int vector.
std::vector<std::vector<int>> point_fingerprints(const Solution& s);

// All relabelings phi with relabel(s, phi) == s, as a group.
PermGroup automorphism_group(const Solution& s);

// Some phi with relabel(a, phi) == b, or nullopt.  Backtracking over point
// images, pruned by fingerprints.
std::optional<Perm> find_isomorphism(const Solution& a, const Solution& b);

// Every phi with relabel(a, phi) == b (empty when non-isomorphic).
std::vector<Perm> all_isomorphisms(const Solution& a, const Solution& b);

// The lexicographically minimal relabeling of the concatenated (sigma, tau)
// tables, minimized over fingerprint-compatible relabelings (sufficient:
// isomorphic solutions share the candidate set).  Idempotent; two solutions
// are isomorphic iff their canonical forms are equal.
Solution canonical_form(const Solution& s);

} // namespace ybe
