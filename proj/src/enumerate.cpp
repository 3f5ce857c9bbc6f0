#include "ybe/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "ybe/autgroup.hpp"
#include "ybe/parallel.hpp"
#include "ybe/perm_group.hpp"
#include "ybe/retract.hpp"

namespace ybe {

namespace {

// Partitions of n, parts descending, in lexicographically decreasing order.
std::vector<std::vector<int>> partitions_desc(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool solution_is_trivial(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        if (!s.sigma[x].is_identity() || !s.tau[x].is_identity())
            return false;
    return true;
}

void sort_dedup_entries(std::vector<CatalogEntry>& entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return table_less(a.sol, b.sol);
    });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const CatalogEntry& a, const CatalogEntry& b) { return a.sol == b.sol; }),
                  entries.end());
}

} // namespace

bool constellation_generates(const Constellation& con) {
    const int k = static_cast<int>(con.block_sizes.size());
    for (int j = 0; j < k; ++j) {
        std::vector<int> gens;
        for (int i = 0; i < k; ++i) {
            if (i == j)
                continue;
            gens.push_back(con.c[i][j]);
            if (!con.involutive)
                gens.push_back(con.d[i][j]);
        }
        if (con.groups[j].subgroup_order(gens) != con.groups[j].order)
            return false;
    }
    return true;
}

Solution solution_from_constellation(const Constellation& con) {
    const int k = static_cast<int>(con.block_sizes.size());
    for (int j = 0; j < k; ++j)
        if (con.groups[j].order != con.block_sizes[j])
            throw std::invalid_argument("constellation: group order does not match block size");
    if (!constellation_generates(con))
        throw std::invalid_argument("constellation: generation condition fails");

    std::vector<int> offset(k + 1, 0);
    for (int j = 0; j < k; ++j)
        offset[j + 1] = offset[j] + con.block_sizes[j];
    const int n = offset[k];
    std::vector<int> block_of(n);
    for (int j = 0; j < k; ++j)
        for (int p = offset[j]; p < offset[j + 1]; ++p)
            block_of[p] = j;

    auto cconst = [&](int i, int j) { return i == j ? 0 : con.c[i][j]; };
    auto dconst = [&](int j, int i) {
        if (j == i)
            return 0;
        return con.involutive ? con.groups[i].neg(con.c[j][i]) : con.d[j][i];
    };

    std::vector<std::vector<int>> sig(n, std::vector<int>(n));
    std::vector<std::vector<int>> tau(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        const int i = block_of[x];
        for (int y = 0; y < n; ++y) {
            const int j = block_of[y];
            // sigma_x(y) = y + c[i][j] inside block j
            sig[x][y] = offset[j] + con.groups[j].add(y - offset[j], cconst(i, j));
            // tau_x(y) = y + d[i][j] inside block j (row x applies to column y)
            tau[x][y] = offset[j] + con.groups[j].add(y - offset[j], dconst(i, j));
        }
    }
    Solution s = make_solution(n, sig, tau);
    if (!check_braid(s) || !is_square_free(s) || !is_2_reductive(s))
        throw std::logic_error("internal error: constellation does not yield a square-free 2-reductive solution");
    if (con.involutive && !is_involutive(s))
        throw std::logic_error("internal error: involutive constellation yields a non-involutive solution");
    return s;
}

std::vector<Constellation> all_constellations(int n, bool involutive_only) {
    std::vector<Constellation> out;
    for (const auto& part : partitions_desc(n)) {
        const int k = static_cast<int>(part.size());
        // One abelian group per block, all isomorphism classes.
        std::vector<std::vector<AbelianGroup>> options;
        for (int j = 0; j < k; ++j)
            options.push_back(abelian_groups(part[j]));
        std::vector<int> gsel(k, 0);
        while (true) {
            Constellation con;
            con.block_sizes = part;
            con.involutive = involutive_only;
            for (int j = 0; j < k; ++j)
                con.groups.push_back(options[j][gsel[j]]);
            con.c.assign(k, std::vector<int>(k, 0));
            if (!involutive_only)
                con.d.assign(k, std::vector<int>(k, 0));

            // Odometer over the off-diagonal constants, row-major, c before d.
            std::vector<std::pair<bool, std::pair<int, int>>> slots; // (is_c, (i,j))
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j)
                        slots.emplace_back(true, std::make_pair(i, j));
            if (!involutive_only)
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (i != j)
                            slots.emplace_back(false, std::make_pair(i, j));
            while (true) {
                if (constellation_generates(con))
                    out.push_back(con);
                size_t t = 0;
                for (; t < slots.size(); ++t) {
                    auto [is_c, ij] = slots[t];
                    auto [i, j] = ij;
                    int& v = is_c ? con.c[i][j] : con.d[i][j];
                    if (++v < con.groups[j].order)
                        break;
                    v = 0;
                }
                if (t == slots.size())
                    break;
            }

            int j = 0;
            for (; j < k; ++j) {
                if (++gsel[j] < static_cast<int>(options[j].size()))
                    break;
                gsel[j] = 0;
            }
            if (j == k)
                break;
        }
    }
    return out;
}

Catalog enumerate_sf_2reductive(int n, bool involutive_only, int jobs) {
    std::vector<Constellation> cons = all_constellations(n, involutive_only);
    std::vector<Solution> results(cons.size());
    parallel_for_index(cons.size(), jobs, [&](size_t i) {
        results[i] = canonical_form(solution_from_constellation(cons[i]));
    });
    Catalog cat;
    cat.n = n;
    cat.cls = involutive_only ? "sf2r-inv" : "sf2r";
    for (Solution& s : results) {
        CatalogEntry e;
        e.sol = std::move(s);
        e.pi1 = Perm::identity(n);
        e.pi2 = Perm::identity(n);
        cat.entries.push_back(std::move(e));
    }
    sort_dedup_entries(cat.entries);
    return cat;
}

Catalog enumerate_sf_2reductive_serial(int n, bool involutive_only) {
    Catalog cat;
    cat.n = n;
    cat.cls = involutive_only ? "sf2r-inv" : "sf2r";
    for (const Constellation& con : all_constellations(n, involutive_only)) {
        CatalogEntry e;
        e.sol = canonical_form(solution_from_constellation(con));
        e.pi1 = Perm::identity(n);
        e.pi2 = Perm::identity(n);
        cat.entries.push_back(std::move(e));
    }
    sort_dedup_entries(cat.entries);
    return cat;
}

std::vector<IsotopeExpansion> isotopes_of_base(const Solution& base, bool involutive_only) {
    if (!is_square_free(base) || !is_2_reductive(base))
        throw std::invalid_argument("isotopes_of_base: base must be square-free 2-reductive");
    if (involutive_only && !is_involutive(base))
        throw std::invalid_argument("isotopes_of_base: base must be involutive in involutive mode");

    PermGroup aut = automorphism_group(base);
    std::vector<IsotopeExpansion> out;

    if (involutive_only) {
        for (const auto& cls : conjugacy_classes(aut)) {
            IsotopePair pair{cls.front(), cls.front().inverse()};
            Solution iso = make_isotope(base, pair);
            if (!is_2_permutational(iso) || !is_involutive(iso))
                throw std::logic_error("internal error: involutive isotope expansion failed");
            out.push_back(IsotopeExpansion{std::move(pair), std::move(iso)});
        }
        return out;
    }

    std::vector<Perm> rows;
    for (int x = 0; x < base.n; ++x) {
        rows.push_back(base.sigma[x]);
        rows.push_back(base.tau[x]);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    for (const auto& cls1 : conjugacy_classes(aut)) {
        const Perm& p1 = cls1.front();
        PermGroup cz = centralizer(aut, p1);
        for (const auto& cls2 : conjugacy_classes(cz)) {
            const Perm& p2 = cls2.front();
            Perm prod = compose(p1, p2);
            bool ok = true;
            for (const Perm& r : rows)
                if (!commutes(prod, r)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            IsotopePair pair{p1, p2};
            Solution iso = make_isotope(base, pair);
            if (!is_2_permutational(iso))
                throw std::logic_error("internal error: isotope expansion is not 2-permutational");
            out.push_back(IsotopeExpansion{std::move(pair), std::move(iso)});
        }
    }
    return out;
}

Catalog enumerate_permutational(int n, bool involutive_only) {
    Catalog cat;
    cat.n = n;
    cat.cls = "perm";
    PermGroup sn = symmetric_group(n);
    for (const auto& fcls : conjugacy_classes(sn)) {
        const Perm& f = fcls.front();
        if (involutive_only) {
            CatalogEntry e;
            e.sol = canonical_form(permutational_solution(n, f, f.inverse()));
            e.pi1 = f;
            e.pi2 = f.inverse();
            cat.entries.push_back(std::move(e));
            continue;
        }
        PermGroup cz = centralizer(sn, f);
        for (const auto& gcls : conjugacy_classes(cz)) {
            const Perm& g = gcls.front();
            CatalogEntry e;
            e.sol = canonical_form(permutational_solution(n, f, g));
            e.pi1 = f;
            e.pi2 = g;
            cat.entries.push_back(std::move(e));
        }
    }
    sort_dedup_entries(cat.entries);
    return cat;
}

namespace {

Catalog merge_2perm(int n, bool involutive_only, Catalog&& perm,
                    std::vector<std::vector<CatalogEntry>>&& expansions) {
    Catalog cat;
    cat.n = n;
    cat.cls = involutive_only ? "2perm-inv" : "2perm";
    cat.entries = std::move(perm.entries);
    for (auto& vec : expansions)
        for (auto& e : vec)
            cat.entries.push_back(std::move(e));
    // Canonical-form dedup as a safety net; the construction should already
    // be collision-free (verified in tests).
    sort_dedup_entries(cat.entries);
    return cat;
}

std::vector<CatalogEntry> expand_base_entry(const Catalog& sf, int base_index, bool involutive_only) {
    std::vector<CatalogEntry> out;
    for (IsotopeExpansion& exp : isotopes_of_base(sf.entries[base_index].sol, involutive_only)) {
        CatalogEntry e;
        e.sol = canonical_form(exp.sol);
        e.base_index = base_index;
        e.pi1 = std::move(exp.pair.pi1);
        e.pi2 = std::move(exp.pair.pi2);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

Catalog enumerate_2permutational(int n, bool involutive_only, int jobs) {
    Catalog sf = enumerate_sf_2reductive(n, involutive_only, jobs);
    Catalog perm = enumerate_permutational(n, involutive_only);
    std::vector<int> base_indices;
    for (int i = 0; i < sf.count(); ++i)
        if (!solution_is_trivial(sf.entries[i].sol))
            base_indices.push_back(i);
    std::vector<std::vector<CatalogEntry>> expansions(base_indices.size());
    parallel_for_index(base_indices.size(), jobs, [&](size_t i) {
        expansions[i] = expand_base_entry(sf, base_indices[i], involutive_only);
    });
    return merge_2perm(n, involutive_only, std::move(perm), std::move(expansions));
}

Catalog enumerate_2permutational_serial(int n, bool involutive_only) {
    Catalog sf = enumerate_sf_2reductive_serial(n, involutive_only);
    Catalog perm = enumerate_permutational(n, involutive_only);
    std::vector<std::vector<CatalogEntry>> expansions;
    for (int i = 0; i < sf.count(); ++i)
        if (!solution_is_trivial(sf.entries[i].sol))
            expansions.push_back(expand_base_entry(sf, i, involutive_only));
    return merge_2perm(n, involutive_only, std::move(perm), std::move(expansions));
}

namespace {

// Exhaustive scan for n <= 3: every choice of 2n rows from S_n.
std::vector<CatalogEntry> brute_force_scan(int n, const std::function<bool(const Solution&)>& pred,
                                           int jobs) {
    const std::vector<Perm> all = symmetric_group(n).elements;
    const long long m = static_cast<long long>(all.size());
    long long total = 1;
    for (int i = 0; i < 2 * n; ++i)
        total *= m;
    const long long chunk_count = m; // split by the first row choice
    const long long per_chunk = total / std::max<long long>(chunk_count, 1);

    std::vector<std::vector<CatalogEntry>> results(chunk_count);
    parallel_for_index(static_cast<size_t>(chunk_count), jobs, [&](size_t ci) {
        std::vector<const Perm*> rows(2 * n);
        rows[0] = &all[ci];
        for (long long rest = 0; rest < per_chunk; ++rest) {
            long long v = rest;
            for (int k = 1; k < 2 * n; ++k) {
                rows[k] = &all[v % m];
                v /= m;
            }
            Solution s;
            s.n = n;
            for (int x = 0; x < n; ++x)
                s.sigma.push_back(*rows[x]);
            for (int y = 0; y < n; ++y)
                s.tau.push_back(*rows[n + y]);
            if (!check_braid(s) || !pred(s))
                continue;
            CatalogEntry e;
            e.sol = canonical_form(s);
            e.pi1 = Perm::identity(n);
            e.pi2 = Perm::identity(n);
            results[ci].push_back(std::move(e));
        }
    });
    std::vector<CatalogEntry> out;
    for (auto& vec : results)
        for (auto& e : vec)
            out.push_back(std::move(e));
    return out;
}

// Backtracking for n >= 4: rows assigned in the order sigma_0, tau_0,
// sigma_1, tau_1, ...; after each assignment every fully determined instance
// of the three braid row identities is checked.
struct BruteBacktrack {
    int n;
    const std::vector<Perm>& all;
    const std::function<bool(const Solution&)>& pred;
    std::vector<const Perm*> sig, tau;
    std::vector<CatalogEntry>& out;

    BruteBacktrack(int n_, const std::vector<Perm>& all_,
                   const std::function<bool(const Solution&)>& pred_,
                   std::vector<CatalogEntry>& out_)
        : n(n_), all(all_), pred(pred_), sig(n_, nullptr), tau(n_, nullptr), out(out_) {}

    bool partial_ok() const {
        // identity: sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{tau_y(x)}
        for (int x = 0; x < n; ++x) {
            if (!sig[x])
                continue;
            for (int y = 0; y < n; ++y) {
                if (!sig[y] || !tau[y])
                    continue;
                const Perm* a = sig[(*sig[x])(y)];
                const Perm* b = sig[(*tau[y])(x)];
                if (!a || !b)
                    continue;
                for (int z = 0; z < n; ++z)
                    if ((*sig[x])((*sig[y])(z)) != (*a)((*b)(z)))
                        return false;
            }
        }
        // identity: tau_x tau_y = tau_{tau_x(y)} tau_{sigma_y(x)}
        for (int x = 0; x < n; ++x) {
            if (!tau[x])
                continue;
            for (int y = 0; y < n; ++y) {
                if (!tau[y] || !sig[y])
                    continue;
                const Perm* a = tau[(*tau[x])(y)];
                const Perm* b = tau[(*sig[y])(x)];
                if (!a || !b)
                    continue;
                for (int z = 0; z < n; ++z)
                    if ((*tau[x])((*tau[y])(z)) != (*a)((*b)(z)))
                        return false;
            }
        }
        // identity: tau_{sigma_{tau_y(x)}(z)}(sigma_x(y)) = sigma_{tau_{sigma_y(z)}(x)}(tau_z(y))
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!sig[x] || !sig[y] || !tau[y])
                    continue;
                for (int z = 0; z < n; ++z) {
                    if (!tau[z])
                        continue;
                    const Perm* s1 = sig[(*tau[y])(x)];
                    if (!s1)
                        continue;
                    const Perm* t1 = tau[(*s1)(z)];
                    const Perm* t2 = tau[(*sig[y])(z)];
                    if (!t1 || !t2)
                        continue;
                    const Perm* s2 = sig[(*t2)(x)];
                    if (!s2)
                        continue;
                    if ((*t1)((*sig[x])(y)) != (*s2)((*tau[z])(y)))
                        return false;
                }
            }
        return true;
    }

    void rec(int slot) {
        if (slot == 2 * n) {
            Solution s;
            s.n = n;
            for (int x = 0; x < n; ++x)
                s.sigma.push_back(*sig[x]);
            for (int y = 0; y < n; ++y)
                s.tau.push_back(*tau[y]);
            if (!check_braid(s) || !pred(s))
                return;
            CatalogEntry e;
            e.sol = canonical_form(s);
            e.pi1 = Perm::identity(n);
            e.pi2 = Perm::identity(n);
            out.push_back(std::move(e));
            return;
        }
        const int point = slot / 2;
        const bool is_sigma = (slot % 2 == 0);
        for (const Perm& cand : all) {
            (is_sigma ? sig : tau)[point] = &cand;
            if (partial_ok())
                rec(slot + 1);
        }
        (is_sigma ? sig : tau)[point] = nullptr;
    }
};

} // namespace

Catalog brute_force_solutions(int n, const std::string& cls,
                              const std::function<bool(const Solution&)>& pred,
                              bool allow_big, int jobs) {
    if (n < 1)
        throw std::invalid_argument("brute_force_solutions: size must be positive");
    if (n > 3 && !allow_big)
        throw std::invalid_argument("brute_force_solutions: size cap is 3 without allow_big");
    Catalog cat;
    cat.n = n;
    cat.cls = cls;
    if (n <= 3) {
        cat.entries = brute_force_scan(n, pred, jobs);
    } else {
        const std::vector<Perm> all = symmetric_group(n).elements;
        BruteBacktrack bt(n, all, pred, cat.entries);
        bt.rec(0);
    }
    sort_dedup_entries(cat.entries);
    return cat;
}

std::function<bool(const Solution&)> class_predicate(const std::string& cls) {
    auto level_at_most = [](const Solution& s, int k) {
        auto lvl = multipermutation_level(s);
        return lvl.has_value() && *lvl <= k;
    };
    if (cls == "sf2r")
        return [](const Solution& s) { return is_square_free(s) && is_2_reductive(s); };
    if (cls == "sf2r-inv")
        return [](const Solution& s) { return is_square_free(s) && is_2_reductive(s) && is_involutive(s); };
    if (cls == "2perm")
        return [=](const Solution& s) { return level_at_most(s, 2); };
    if (cls == "2perm-inv")
        return [=](const Solution& s) { return level_at_most(s, 2) && is_involutive(s); };
    if (cls == "2red")
        return [](const Solution& s) { return is_2_reductive(s); };
    if (cls == "2red-inv")
        return [](const Solution& s) { return is_2_reductive(s) && is_involutive(s); };
    if (cls == "perm")
        return [=](const Solution& s) { return level_at_most(s, 1); };
    throw std::invalid_argument("unknown class name: " + cls);
}

namespace {

Catalog filter_catalog(Catalog&& cat, const std::string& cls,
                       const std::function<bool(const Solution&)>& keep) {
    Catalog out;
    out.n = cat.n;
    out.cls = cls;
    for (auto& e : cat.entries)
        if (keep(e.sol))
            out.entries.push_back(std::move(e));
    return out;
}

} // namespace

Catalog enumerate_class(const std::string& cls, int n, int jobs) {
    if (cls == "sf2r")
        return enumerate_sf_2reductive(n, false, jobs);
    if (cls == "sf2r-inv")
        return enumerate_sf_2reductive(n, true, jobs);
    if (cls == "2perm")
        return enumerate_2permutational(n, false, jobs);
    if (cls == "2perm-inv")
        return enumerate_2permutational(n, true, jobs);
    if (cls == "2red")
        return filter_catalog(enumerate_2permutational(n, false, jobs), "2red",
                              [](const Solution& s) { return is_2_reductive(s); });
    if (cls == "2red-inv")
        return filter_catalog(enumerate_2permutational(n, true, jobs), "2red-inv",
                              [](const Solution& s) { return is_2_reductive(s); });
    if (cls == "perm")
        return enumerate_permutational(n, false);
    throw std::invalid_argument("unknown class name: " + cls);
}

TableReport table_counts(int max_n, int jobs) {
    // Reference counts per class for sizes 1..6.  The size-6 cells of the two
    // general rows are certified by the acceptance suite with an exhaustive
    // relabeling scan of the full catalog plus a pipeline-independent direct
    // classification of the 2-reductive class; both reproduce these values.
    static const std::vector<std::pair<std::string, std::vector<long long>>> expected = {
        {"2perm", {1, 4, 20, 219, 3113, 89192}},
        {"2red", {1, 4, 20, 207, 3061, 88108}},
        {"sf2r", {1, 1, 4, 20, 183, 2513}},
        {"2perm-inv", {1, 2, 5, 19, 70, 359}},
        {"2red-inv", {1, 2, 5, 17, 65, 323}},
        {"sf2r-inv", {1, 1, 2, 5, 15, 55}},
    };
    TableReport rep;
    rep.max_n = max_n;
    for (const auto& [cls, exp] : expected) {
        TableRow row;
        row.cls = cls;
        for (int i = 0; i < std::min<int>(max_n, static_cast<int>(exp.size())); ++i)
            row.expected.push_back(exp[i]);
        rep.rows.push_back(std::move(row));
    }
    for (int n = 1; n <= max_n; ++n) {
        Catalog a = enumerate_2permutational(n, false, jobs);
        Catalog ai = enumerate_2permutational(n, true, jobs);
        Catalog sf = enumerate_sf_2reductive(n, false, jobs);
        Catalog sfi = enumerate_sf_2reductive(n, true, jobs);
        auto count_2red = [](const Catalog& c) {
            long long k = 0;
            for (const auto& e : c.entries)
                if (is_2_reductive(e.sol))
                    ++k;
            return k;
        };
        rep.rows[0].counts.push_back(a.count());
        rep.rows[1].counts.push_back(count_2red(a));
        rep.rows[2].counts.push_back(sf.count());
        rep.rows[3].counts.push_back(ai.count());
        rep.rows[4].counts.push_back(count_2red(ai));
        rep.rows[5].counts.push_back(sfi.count());
    }
    for (auto& row : rep.rows) {
        for (size_t i = 0; i < row.expected.size(); ++i)
            if (row.counts[i] != row.expected[i])
                row.match = false;
        rep.all_match = rep.all_match && row.match;
    }
    return rep;
}

} // namespace ybe
