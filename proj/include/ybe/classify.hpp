#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/perm_group.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// sigma_{sigma_x(y)} = sigma_y, tau_{tau_x(y)} = tau_y,
// sigma_{tau_x(y)} = sigma_y, tau_{sigma_x(y)} = tau_y.
bool is_2_reductive(const Solution& s);

// sigma_{sigma_x(z)} = sigma_{sigma_y(z)} and the three companion families
// (rows constant in the first subscript's choice).  Equivalent to
// multipermutation level <= 2 for braid solutions.
bool is_2_permutational(const Solution& s);

// Diagonal maps U(x) = sigma_x^{-1}(x), T(x) = tau_x^{-1}(x).  Bijectivity is
// verified (throws if violated); for 2-permutational inputs the closed-form
// inverses and UT = TU are asserted as internal checks.
Perm diagonal_U(const Solution& s);
Perm diagonal_T(const Solution& s);

// phi sigma_x = sigma_{phi(x)} phi and phi tau_x = tau_{phi(x)} phi for all x.
bool is_automorphism(const Solution& s, const Perm& phi);

// Group generated by the pairs (sigma_x, tau_x^{-1}).
PermPairGroup permutation_group(const Solution& s);

// Group generated by the pairs (sigma_x sigma_y^{-1}, tau_x^{-1} tau_y).
PermPairGroup displacement_group(const Solution& s);

// Named identity battery valid in every 2-permutational solution: the
// defining families, their single-subscript consequences, composition
// consequences, commutation laws and the entropic laws.  Returns one
// (name, holds) entry per identity.
std::vector<std::pair<std::string, bool>> check_2perm_identity_suite(const Solution& s);

// Six conditions that are equivalent for 2-permutational solutions:
//   [0] 2-reductive
//   [1] left and right distributive
//   [2] every sigma_x and tau_x is an automorphism
//   [3] <{sigma_x, tau_x} u {U, T}> is abelian
//   [4] <{(sigma_x, tau_x^{-1})} u {(U^{-1}, T)}> is abelian
//   [5] U sigma_x = sigma_x U and T tau_x = tau_x T for all x
std::array<bool, 6> prop_six_equivalents(const Solution& s);

struct ClassificationReport {
    bool braid = false;
    bool involutive = false;
    bool square_free = false;
    bool lri = false;
    bool left_distributive = false;
    bool right_distributive = false;
    bool two_reductive = false;
    bool two_permutational = false;
    bool irretractable = false;
    std::optional<int> mpl;
    bool dis_abelian = false;
};

// Full flag battery; mpl and dis_abelian are computed only when braid holds.
ClassificationReport classify_solution(const Solution& s);

} // namespace ybe
