#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "ybe/autgroup.hpp"
#include "ybe/classify.hpp"
#include "ybe/isotope.hpp"
#include "ybe/retract.hpp"

using namespace ybe;

namespace {
IsotopePair pair_of(int n, const char* a, const char* b) {
    return {Perm::from_cycles(n, a), Perm::from_cycles(n, b)};
}
} // namespace

TEST_CASE("identity twist reproduces the solution") {
    Solution b = twoblock4();
    CHECK(make_isotope(b, pair_of(4, "id", "id")) == b);
}

TEST_CASE("twists of the two-block base") {
    Solution b = twoblock4();

    // a valid non-involutive twist
    Solution s1 = make_isotope(b, pair_of(4, "(0,2,1,3)", "(0,2,1,3)"));
    CHECK(check_braid(s1));
    CHECK(is_2_permutational(s1));
    CHECK(!is_involutive(s1));

    // pi2 = pi1^{-1} with pi1 an automorphism: involutive result
    Solution s2 = make_isotope(b, pair_of(4, "(0,2,1,3)", "(0,3,1,2)"));
    CHECK(check_braid(s2));
    CHECK(is_involutive(s2));
    CHECK(multipermutation_level(s2) == 2);

    // pi1 = (0,2,1,3) does not commute with the base rows: not 2-reductive
    CHECK(!is_2_reductive(s1));
    CHECK(!is_2_reductive(s2));

    // a twist by a commuting automorphism pair stays 2-reductive
    Solution s3 = make_isotope(b, pair_of(4, "(0,1)", "(2,3)"));
    CHECK(check_braid(s3));
    CHECK(is_2_reductive(s3));
}

TEST_CASE("closure conditions") {
    Solution b = twoblock4();
    CHECK(check_is_conditions(b, pair_of(4, "id", "id")));
    CHECK(check_is_conditions(b, pair_of(4, "(0,2,1,3)", "(0,3,1,2)")));
    CHECK(check_is_conditions(b, pair_of(4, "(0,1)", "(2,3)")));
    // mixing a non-central twist with a 4-cycle violates them
    CHECK(!check_is_conditions(b, pair_of(4, "(0,1)", "(0,2,1,3)")));

    // conditions hold exactly when the twisted tables satisfy the braid
    for (const Perm& p : symmetric_group(4).elements)
        for (const Perm& q : symmetric_group(4).elements) {
            IsotopePair pr{p, q};
            bool ok = check_is_conditions(b, pr);
            bool braid_ok = true;
            try {
                make_isotope(b, pr);
            } catch (const std::invalid_argument&) {
                braid_ok = false;
            }
            CHECK(ok == braid_ok);
        }
}

TEST_CASE("invalid twists are refused with a braid witness") {
    // the diagonal maps of the irretractable example do not yield a solution
    Solution a = irretractable5();
    Perm u = diagonal_U(a), t = diagonal_T(a);
    CHECK_THROWS_AS(make_isotope(a, IsotopePair{u, t}), std::invalid_argument);
}

TEST_CASE("base decomposition round-trips") {
    for (const Solution& s :
         {twoblock4(), trivial_solution(4),
          permutational_solution(4, Perm::from_cycles(4, "(0,1,2,3)"), Perm::from_cycles(4, "(0,3,2,1)")),
          make_isotope(twoblock4(), pair_of(4, "(0,2,1,3)", "(0,3,1,2)")),
          make_isotope(twoblock4(), pair_of(4, "(0,2,1,3)", "(0,2,1,3)"))}) {
        auto [base, pair] = square_free_isotope(s);
        CHECK(is_square_free(base));
        CHECK(is_2_reductive(base));
        CHECK(make_isotope(base, pair) == s);
        if (is_square_free(s)) {
            // a square-free input is its own base with identity twists
            CHECK(base == s);
            CHECK(pair.pi1.is_identity());
            CHECK(pair.pi2.is_identity());
        }
    }
    CHECK_THROWS_AS(square_free_isotope(level3_4pt()), std::invalid_argument);
    CHECK_THROWS_AS(square_free_isotope(irretractable5()), std::invalid_argument);
}

TEST_CASE("pointwise reductive twist at a point") {
    Solution s = make_isotope(twoblock4(), pair_of(4, "(0,2,1,3)", "(0,3,1,2)"));
    for (int e = 0; e < s.n; ++e) {
        Solution red = reductive_isotope_at(s, e);
        CHECK(check_braid(red));
        CHECK(is_2_reductive(red));
    }
    CHECK_THROWS_AS(reductive_isotope_at(level3_4pt(), 0), std::invalid_argument);
}

TEST_CASE("involutive twist criterion") {
    Solution b = twoblock4();
    PermGroup aut = automorphism_group(b);
    // on a square-free involutive base: involutive iff pi2 = pi1^{-1} and
    // pi1 is an automorphism
    for (const Perm& p : symmetric_group(4).elements)
        for (const Perm& q : symmetric_group(4).elements) {
            IsotopePair pr{p, q};
            if (!check_is_conditions(b, pr))
                continue;
            bool expect = (q == p.inverse()) && contains(aut, p);
            CHECK(involutive_pair_condition(b, pr) == expect);
            CHECK(involutive_pair_condition(b, pr) == is_involutive(make_isotope(b, pr)));
        }
}

TEST_CASE("involutive consistency battery") {
    CHECK(check_involutive_isotope_consistency(twoblock4()));
    CHECK(check_involutive_isotope_consistency(trivial_solution(3)));
    Solution s2 = make_isotope(twoblock4(), pair_of(4, "(0,2,1,3)", "(0,3,1,2)"));
    CHECK(check_involutive_isotope_consistency(s2));
}
