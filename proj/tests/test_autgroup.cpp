#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"
#include "ybe/autgroup.hpp"
#include "ybe/classify.hpp"

using namespace ybe;

TEST_CASE("automorphism groups of the fixtures") {
    PermGroup aut = automorphism_group(twoblock4());
    CHECK(aut.order() == 8);
    CHECK(!is_abelian(aut));
    CHECK(contains(aut, Perm::from_cycles(4, "(0,1)")));
    CHECK(contains(aut, Perm::from_cycles(4, "(0,2,1,3)")));
    CHECK(conjugacy_classes(aut).size() == 5);
    for (const Perm& p : aut.elements)
        CHECK(is_automorphism(twoblock4(), p));

    CHECK(automorphism_group(trivial_solution(3)).order() == 6);
    PermGroup aut_c = automorphism_group(level3_4pt());
    CHECK(aut_c.order() == 2); // only id and (1,3)
    CHECK(contains(aut_c, Perm::from_cycles(4, "(1,3)")));
}

TEST_CASE("isomorphism search") {
    Solution b = twoblock4();
    std::mt19937 rng(99);
    std::vector<int> img(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        Perm phi{img};
        Solution moved = relabel(b, phi);
        auto found = find_isomorphism(b, moved);
        REQUIRE(found.has_value());
        CHECK(relabel(b, *found) == moved);
        CHECK(all_isomorphisms(b, moved).size() == automorphism_group(b).order());
    }
    CHECK(!find_isomorphism(b, trivial_solution(4)).has_value());
    CHECK(!find_isomorphism(b, trivial_solution(3)).has_value());
    CHECK(all_isomorphisms(b, level3_4pt()).empty());
}

TEST_CASE("canonical forms decide isomorphism") {
    std::mt19937 rng(7);
    for (const Solution& s : {twoblock4(), level3_4pt(), irretractable5()}) {
        Solution canon = canonical_form(s);
        CHECK(canonical_form(canon) == canon); // idempotent
        REQUIRE(find_isomorphism(s, canon).has_value());
        std::vector<int> img(s.n);
        for (int trial = 0; trial < 15; ++trial) {
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            CHECK(canonical_form(relabel(s, Perm{img})) == canon);
        }
    }
    CHECK(canonical_form(twoblock4()) != canonical_form(trivial_solution(4)));
}

TEST_CASE("orbit times stabilizer equals n!") {
    for (const Solution& s : {twoblock4(), level3_4pt(), trivial_solution(3)}) {
        std::set<Solution, decltype(&table_less)> orbit(&table_less);
        PermGroup sn = symmetric_group(s.n);
        for (const Perm& phi : sn.elements)
            orbit.insert(relabel(s, phi));
        CHECK(orbit.size() * automorphism_group(s).order() == sn.order());
    }
}

TEST_CASE("fingerprints are isomorphism invariants") {
    Solution s = irretractable5();
    auto fp = point_fingerprints(s);
    CHECK(fp.size() == 5);
    Perm phi = Perm::from_cycles(5, "(0,4,1)(2,3)");
    auto fp2 = point_fingerprints(relabel(s, phi));
    for (int x = 0; x < 5; ++x)
        CHECK(fp[x] == fp2[phi(x)]);
}
