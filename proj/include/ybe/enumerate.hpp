#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybe/abelian.hpp"
#include "ybe/classify.hpp"
#include "ybe/isotope.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Combinatorial datum behind a square-free 2-reductive solution: a partition
// n = n_1 + ... + n_k, an abelian group A_j of order n_j per block, and
// translation constants.  For x in block i and y in block j:
//   sigma_x(y) = y + c[i][j]      (in A_j)
//   tau_y(x)   = x + d[j][i]      (in A_i; involutive mode stores no d and
//                                  uses tau_y(x) = x - c[j][i] instead)
// Constants on the diagonal are zero.  A constellation is admissible when
// each A_j is generated by the constants pointing into it.
struct Constellation {
    std::vector<int> block_sizes;
    std::vector<AbelianGroup> groups;
    std::vector<std::vector<int>> c;
    std::vector<std::vector<int>> d;
    bool involutive = false;
};

// Whether each A_j is generated by { c[i][j], d[i][j] : i != j }.
bool constellation_generates(const Constellation& con);

// Points ordered block by block, elements of each block in index order.
// Throws if the generation condition fails; asserts the result is a
// square-free 2-reductive solution (involutive when flagged).
Solution solution_from_constellation(const Constellation& con);

// All admissible constellations for size n, in deterministic order.
std::vector<Constellation> all_constellations(int n, bool involutive_only);

// One catalog entry: a canonical-form solution plus provenance (the index of
// its base in the square-free 2-reductive catalog of the same run, or nullopt
// for entries built directly from a commuting row pair) and the twist pair.
// flags are filled on demand before serialization.
struct CatalogEntry {
    Solution sol;
    std::optional<int> base_index;
    Perm pi1, pi2;
    std::optional<ClassificationReport> flags;
};

struct Catalog {
    int n = 0;
    std::string cls;
    std::vector<CatalogEntry> entries;

    int count() const { return static_cast<int>(entries.size()); }
};

// All square-free 2-reductive solutions of size n up to isomorphism
// (involutive ones only, when flagged), as canonical forms in table order.
Catalog enumerate_sf_2reductive(int n, bool involutive_only, int jobs = 1);
// Straight-line single-threaded reference with identical output.
Catalog enumerate_sf_2reductive_serial(int n, bool involutive_only);

// All (pi1, pi2)-isotopes of a square-free 2-reductive base, one per
// isomorphism class: pi1 ranges over conjugacy class representatives of the
// base's automorphism group, pi2 over class representatives of pi1's
// centralizer, filtered by the requirement that pi1 pi2 commute with every
// row of the base.  Involutive mode emits the (pi, pi^{-1}) pairs instead.
struct IsotopeExpansion {
    IsotopePair pair;
    Solution sol; // raw tables over the base's labels, not canonicalized
};
std::vector<IsotopeExpansion> isotopes_of_base(const Solution& base, bool involutive_only);

// All solutions with constant rows sigma_x = f, tau_y = g (f, g commuting)
// up to isomorphism, i.e. commuting pairs up to simultaneous conjugacy.
// Involutive mode keeps the pairs (f, f^{-1}).
Catalog enumerate_permutational(int n, bool involutive_only = false);

// All solutions of multipermutation level <= 2 up to isomorphism: the
// permutational ones plus the isotope expansions of every non-trivial
// square-free 2-reductive base, deduplicated by canonical form.
Catalog enumerate_2permutational(int n, bool involutive_only, int jobs = 1);
Catalog enumerate_2permutational_serial(int n, bool involutive_only);

// Exhaustive scan over all row assignments (2n rows from S_n), keeping the
// braid solutions that satisfy pred, as canonical forms.  Plain product scan
// for n <= 3; n >= 4 requires allow_big and uses backtracking over rows with
// partial identity checks.
Catalog brute_force_solutions(int n, const std::string& cls,
                              const std::function<bool(const Solution&)>& pred,
                              bool allow_big = false, int jobs = 1);

// Predicate for a catalog class name ("sf2r", "sf2r-inv", "2perm",
// "2perm-inv", "2red", "2red-inv", "perm"); throws on unknown names.
std::function<bool(const Solution&)> class_predicate(const std::string& cls);

// Catalog for a class name via the constructive pipeline.
Catalog enumerate_class(const std::string& cls, int n, int jobs = 1);

// Counts for the six enumerable classes at sizes 1..max_n, with the frozen
// expected values for n <= 6.
struct TableRow {
    std::string cls;
    std::vector<long long> counts;
    std::vector<long long> expected; // empty beyond the frozen range
    bool match = true;
};
struct TableReport {
    int max_n = 0;
    std::vector<TableRow> rows;
    bool all_match = true;
};
TableReport table_counts(int max_n, int jobs = 1);

} // namespace ybe
