#pragma once

#include <utility>

#include "ybe/solution.hpp"

namespace ybe {

// A pair of relabel-free twists applied columnwise:
//   mu_x = sigma_x o pi1,  nu_x = tau_x o pi2.
struct IsotopePair {
    Perm pi1, pi2;

    friend bool operator==(const IsotopePair& a, const IsotopePair& b) = default;
};

// Builds the twisted tables and verifies the braid relation; throws with the
// first failing triple if the candidate is not a solution.
Solution make_isotope(const Solution& s, const IsotopePair& pair);

// For a square-free 2-reductive base (X, L, R): the three closure conditions
//   L_x pi1 L_y          = L_{pi1(y)} pi1 L_{pi2(x)}
//   R_x pi2 R_y          = R_{pi2(y)} pi2 R_{pi1(x)}
//   R_{pi1(y)} pi2 L_x pi1 = L_{pi2(x)} pi1 R_y pi2
// evaluated exhaustively over all x, y.
bool check_is_conditions(const Solution& base, const IsotopePair& pair);

// The (sigma_e^{-1}, tau_e^{-1})-isotope of a 2-permutational solution; the
// result is asserted 2-reductive.  Throws if s is not 2-permutational.
Solution reductive_isotope_at(const Solution& s, int e);

// Decomposes a 2-permutational solution as an isotope of its square-free
// 2-reductive base: returns (base, pair) with make_isotope(base, pair) == s.
// The base is the (U, T)-isotope of s and the pair is (U^{-1}, T^{-1});
// square-freeness, 2-reductivity and that U, T are automorphisms of the base
// are asserted.  Throws if s is not 2-permutational.
std::pair<Solution, IsotopePair> square_free_isotope(const Solution& s);

// For a 2-reductive involutive base: whether the (pi1, pi2)-isotope is
// involutive, via the closed criterion pi2 = L_x pi1^{-1} L_{pi1(x)}^{-1},
// checked for every x.
bool involutive_pair_condition(const Solution& base, const IsotopePair& pair);

// Consistency battery for a 2-permutational involutive solution: the two
// involutive composition identities, involutivity of the (U, T)-isotope, and
// involutivity of every (sigma_e^{-1}, tau_e^{-1})-isotope.
bool check_involutive_isotope_consistency(const Solution& s);

} // namespace ybe
