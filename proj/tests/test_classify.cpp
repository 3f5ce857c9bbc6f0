#include <doctest.h>

#include "test_util.hpp"
#include "ybe/classify.hpp"
#include "ybe/retract.hpp"

using namespace ybe;

TEST_CASE("reductivity and permutational flags") {
    CHECK(is_2_reductive(twoblock4()));
    CHECK(is_2_permutational(twoblock4()));

    CHECK(!is_2_reductive(level3_4pt()));
    CHECK(!is_2_permutational(level3_4pt()));

    CHECK(!is_2_reductive(irretractable5()));
    CHECK(!is_2_permutational(irretractable5()));

    CHECK(is_2_reductive(trivial_solution(3)));
    Solution perm3 = permutational_solution(3, Perm::from_cycles(3, "(0,1,2)"),
                                            Perm::from_cycles(3, "(0,2,1)"));
    CHECK(is_2_permutational(perm3));
    CHECK(is_2_reductive(perm3)); // constant rows make all four families trivial
}

TEST_CASE("2-permutational agrees with multipermutation level <= 2 on braid solutions") {
    for (const Solution& s : {twoblock4(), level3_4pt(), irretractable5(), trivial_solution(1),
                              trivial_solution(4)}) {
        auto lvl = multipermutation_level(s);
        CHECK(is_2_permutational(s) == (lvl.has_value() && *lvl <= 2));
    }
}

TEST_CASE("diagonal maps") {
    CHECK(diagonal_U(irretractable5()) == Perm::from_cycles(5, "(2,3)"));
    CHECK(diagonal_T(irretractable5()) == Perm::from_cycles(5, "(2,3)"));
    CHECK(diagonal_U(twoblock4()).is_identity()); // square-free: diagonal fixed pointwise
    CHECK(diagonal_T(twoblock4()).is_identity());
    CHECK(diagonal_U(level3_4pt()) == Perm::from_cycles(4, "(0,2)"));
}

TEST_CASE("automorphism predicate") {
    Solution b = twoblock4();
    CHECK(is_automorphism(b, Perm::from_cycles(4, "(0,1)")));
    CHECK(is_automorphism(b, Perm::from_cycles(4, "(0,2,1,3)")));
    CHECK(!is_automorphism(b, Perm::from_cycles(4, "(0,1,2)")));
    // the diagonal map of the irretractable example is not an automorphism
    Solution a = irretractable5();
    CHECK(!is_automorphism(a, diagonal_U(a)));
    CHECK(is_automorphism(a, Perm::identity(5)));
}

TEST_CASE("displacement group of the two-block case") {
    PermPairGroup dis = displacement_group(twoblock4());
    // sigma_x sigma_y^{-1} takes the values id and (0,1)(2,3)
    CHECK(dis.elements.size() == 2);
    CHECK(is_abelian(dis));

    PermPairGroup pg = permutation_group(twoblock4());
    CHECK(pg.elements.size() == 4); // <(0,1),(2,3)> paired with itself
    CHECK(is_abelian(pg));
}

TEST_CASE("six equivalent conditions separate at level 3") {
    // the level-3 example satisfies the abelian/commutation conditions but is
    // not 2-reductive, not distributive, and its rows are not automorphisms
    std::array<bool, 6> got = prop_six_equivalents(level3_4pt());
    CHECK(got == std::array<bool, 6>{false, false, false, true, true, true});

    // on 2-permutational inputs all six agree
    for (const Solution& s :
         {twoblock4(), trivial_solution(3),
          permutational_solution(4, Perm::from_cycles(4, "(0,1,2,3)"), Perm::from_cycles(4, "(0,3,2,1)"))}) {
        std::array<bool, 6> ans = prop_six_equivalents(s);
        for (int i = 1; i < 6; ++i)
            CHECK(ans[i] == ans[0]);
    }
}

TEST_CASE("identity battery holds on 2-permutational fixtures") {
    for (const Solution& s : {twoblock4(), trivial_solution(4),
                              permutational_solution(3, Perm::from_cycles(3, "(0,1,2)"),
                                                     Perm::from_cycles(3, "(0,2,1)"))}) {
        auto suite = check_2perm_identity_suite(s);
        CHECK(suite.size() == 24);
        for (const auto& [name, holds] : suite) {
            INFO(name);
            CHECK(holds);
        }
    }
}

TEST_CASE("full report on fixtures") {
    ClassificationReport rb = classify_solution(twoblock4());
    CHECK(rb.braid);
    CHECK(rb.involutive);
    CHECK(rb.square_free);
    CHECK(rb.lri);
    CHECK(rb.left_distributive);
    CHECK(rb.right_distributive);
    CHECK(rb.two_reductive);
    CHECK(rb.two_permutational);
    CHECK(!rb.irretractable);
    CHECK(rb.mpl == 2);
    CHECK(rb.dis_abelian);

    ClassificationReport ra = classify_solution(irretractable5());
    CHECK(ra.braid);
    CHECK(!ra.involutive);
    CHECK(ra.irretractable);
    CHECK(!ra.mpl.has_value());

    ClassificationReport rc = classify_solution(level3_4pt());
    CHECK(rc.braid);
    CHECK(rc.mpl == 3);
    CHECK(!rc.two_permutational);
}
