#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

// A finite non-degenerate set-theoretic solution on X = {0..n-1}:
//   r(x, y) = (sigma[x](y), tau[y](x))
// with every sigma[x] and tau[y] a bijection of X.  sigma[x] is the row for
// first subscript x, likewise tau[y].
struct Solution {
    int n = 0;
    std::vector<Perm> sigma;
    std::vector<Perm> tau;

    int s(int x, int y) const { return sigma[x](y); }
    int t(int y, int x) const { return tau[y](x); }

    friend bool operator==(const Solution& a, const Solution& b) = default;
};

// Orders solutions by degree, then the concatenated (sigma, tau) tables
// lexicographically.  Used for catalog order and canonical forms.
bool table_less(const Solution& a, const Solution& b);

// Builds a solution from raw image tables; throws std::invalid_argument
// naming the offending row if some row is not a bijection.  Does not require
// the braid relation to hold.
Solution make_solution(int n, const std::vector<std::vector<int>>& sigma,
                       const std::vector<std::vector<int>>& tau);

Solution trivial_solution(int n);

// Constant rows: sigma[x] = f and tau[y] = g for all x, y.  A solution iff
// f and g commute (checked).
Solution permutational_solution(int n, const Perm& f, const Perm& g);

// Braid check, evaluated two independent ways: directly on all n^3 triples,
// and through the equivalent row identities
//   sigma_x sigma_y               = sigma_{sigma_x(y)} sigma_{tau_y(x)}
//   tau_{sigma_{tau_y(x)}(z)}(sigma_x(y)) = sigma_{tau_{sigma_y(z)}(x)}(tau_z(y))
//   tau_x tau_y                   = tau_{tau_x(y)} tau_{sigma_y(x)}
// Any disagreement between the two routes is an internal error.
bool check_braid(const Solution& s);
bool braid_holds_by_triples(const Solution& s);
bool braid_holds_by_identities(const Solution& s);

// First triple (x,y,z) on which the braid relation fails, if any.
std::optional<std::array<int, 3>> braid_violation(const Solution& s);

// r o r = id.
bool is_involutive(const Solution& s);

// sigma_x(x) = x and tau_x(x) = x for all x.
bool is_square_free(const Solution& s);

// sigma_x = tau_x^{-1} for all x ("left inverse = right" rows).
bool satisfies_lri(const Solution& s);

// sigma_x sigma_y = sigma_{sigma_x(y)} sigma_x  (and the tau analogue).
bool is_left_distributive(const Solution& s);
bool is_right_distributive(const Solution& s);

// The inverse solution: tables of r^{-1}.  Requires r bijective on X x X
// (verified; throws otherwise).  Postcondition asserts the four defining
// identities linking the inverse tables to the original ones.
Solution inverse_solution(const Solution& s);

// Conjugated tables under the relabeling phi: the image solution has
// sigma'_{phi(x)}(phi(y)) = phi(sigma_x(y)), likewise tau.
Solution relabel(const Solution& s, const Perm& phi);

} // namespace ybe
