#include "ybe/isotope.hpp"

#include <stdexcept>
#include <string>

#include "ybe/classify.hpp"

namespace ybe {

Solution make_isotope(const Solution& s, const IsotopePair& pair) {
    if (pair.pi1.degree() != s.n || pair.pi2.degree() != s.n)
        throw std::invalid_argument("make_isotope: degree mismatch");
    Solution iso;
    iso.n = s.n;
    iso.sigma.reserve(s.n);
    iso.tau.reserve(s.n);
    for (int x = 0; x < s.n; ++x) {
        iso.sigma.push_back(compose(s.sigma[x], pair.pi1));
        iso.tau.push_back(compose(s.tau[x], pair.pi2));
    }
    if (auto viol = braid_violation(iso)) {
        auto [x, y, z] = *viol;
        throw std::invalid_argument("make_isotope: braid fails at triple (" + std::to_string(x) +
                                    "," + std::to_string(y) + "," + std::to_string(z) + ")");
    }
    if (!braid_holds_by_identities(iso))
        throw std::logic_error("internal error: braid routes disagree on isotope");
    return iso;
}

bool check_is_conditions(const Solution& base, const IsotopePair& pair) {
    const int n = base.n;
    const Perm& p1 = pair.pi1;
    const Perm& p2 = pair.pi2;
    if (p1.degree() != n || p2.degree() != n)
        throw std::invalid_argument("check_is_conditions: degree mismatch");
    auto L = [&](int x) -> const Perm& { return base.sigma[x]; };
    auto R = [&](int x) -> const Perm& { return base.tau[x]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int w = 0; w < n; ++w) {
                if (L(x)(p1(L(y)(w))) != L(p1(y))(p1(L(p2(x))(w))))
                    return false;
                if (R(x)(p2(R(y)(w))) != R(p2(y))(p2(R(p1(x))(w))))
                    return false;
                if (R(p1(y))(p2(L(x)(p1(w)))) != L(p2(x))(p1(R(y)(p2(w)))))
                    return false;
            }
    return true;
}

Solution reductive_isotope_at(const Solution& s, int e) {
    if (e < 0 || e >= s.n)
        throw std::invalid_argument("reductive_isotope_at: base point out of range");
    if (!is_2_permutational(s))
        throw std::invalid_argument("reductive_isotope_at: solution is not 2-permutational");
    Solution iso = make_isotope(s, IsotopePair{s.sigma[e].inverse(), s.tau[e].inverse()});
    if (!is_2_reductive(iso))
        throw std::logic_error("internal error: base-point isotope is not 2-reductive");
    return iso;
}

std::pair<Solution, IsotopePair> square_free_isotope(const Solution& s) {
    if (!is_2_permutational(s))
        throw std::invalid_argument("square_free_isotope: solution is not 2-permutational");
    Perm U = diagonal_U(s);
    Perm T = diagonal_T(s);
    Solution base = make_isotope(s, IsotopePair{U, T});
    if (!is_square_free(base) || !is_2_reductive(base))
        throw std::logic_error("internal error: diagonal isotope is not a square-free 2-reductive solution");
    if (!is_automorphism(base, U) || !is_automorphism(base, T))
        throw std::logic_error("internal error: diagonal maps are not automorphisms of the base");
    IsotopePair back{U.inverse(), T.inverse()};
    if (make_isotope(base, back) != s)
        throw std::logic_error("internal error: base does not reconstruct the solution");
    return {std::move(base), std::move(back)};
}

bool involutive_pair_condition(const Solution& base, const IsotopePair& pair) {
    if (!is_2_reductive(base) || !is_involutive(base))
        throw std::invalid_argument("involutive_pair_condition: base must be 2-reductive involutive");
    const Perm p1inv = pair.pi1.inverse();
    for (int x = 0; x < base.n; ++x) {
        const Perm rhs = compose(base.sigma[x], compose(p1inv, base.sigma[pair.pi1(x)].inverse()));
        if (rhs != pair.pi2)
            return false;
    }
    return true;
}

bool check_involutive_isotope_consistency(const Solution& s) {
    if (!is_2_permutational(s) || !is_involutive(s))
        throw std::invalid_argument("check_involutive_isotope_consistency: input must be 2-permutational involutive");
    const int n = s.n;
    // sigma_x tau_y tau_x = tau_{sigma_x(y)}
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Perm lhs = compose(s.sigma[x], compose(s.tau[y], s.tau[x]));
            if (lhs != s.tau[s.s(x, y)])
                return false;
        }
    // tau_y tau_x^{-1} = sigma_x tau_{sigma_x^{-1}(y)}
    for (int x = 0; x < n; ++x) {
        const Perm sxinv = s.sigma[x].inverse();
        const Perm txinv = s.tau[x].inverse();
        for (int y = 0; y < n; ++y) {
            const Perm lhs = compose(s.tau[y], txinv);
            const Perm rhs = compose(s.sigma[x], s.tau[sxinv(y)]);
            if (lhs != rhs)
                return false;
        }
    }
    try {
        Solution base = make_isotope(s, IsotopePair{diagonal_U(s), diagonal_T(s)});
        if (!is_involutive(base))
            return false;
        for (int e = 0; e < n; ++e)
            if (!is_involutive(reductive_isotope_at(s, e)))
                return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

} // namespace ybe
