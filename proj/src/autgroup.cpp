#include "ybe/autgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "ybe/retract.hpp"

namespace ybe {

std::vector<std::vector<int>> point_fingerprints(const Solution& s) {
    Partition ap = approx_partition(s);
    std::vector<std::vector<int>> fps(s.n);
    for (int x = 0; x < s.n; ++x) {
        std::vector<int>& fp = fps[x];
        fp.push_back(s.s(x, x) == x ? 1 : 0);
        fp.push_back(static_cast<int>(ap.classes[ap.class_of[x]].size()));
        std::vector<int> ct = cycle_type(s.sigma[x]);
        fp.push_back(static_cast<int>(ct.size()));
        fp.insert(fp.end(), ct.begin(), ct.end());
        ct = cycle_type(s.tau[x]);
        fp.push_back(static_cast<int>(ct.size()));
        fp.insert(fp.end(), ct.begin(), ct.end());
    }
    return fps;
}

namespace {

// Backtracking over images of 0..n-1 in order; candidates restricted to
// fingerprint-equal points.  Partial consistency: whenever the image of a
// table value is already fixed it must match the target's table.
struct IsoSearch {
    const Solution& a;
    const Solution& b;
    std::vector<std::vector<int>> fa, fb;
    std::vector<int> phi;       // image of each point of a, -1 when unset
    std::vector<char> used;     // image points of b taken so far
    bool collect_all = false;
    std::vector<Perm> found;

    IsoSearch(const Solution& a_, const Solution& b_) : a(a_), b(b_) {
        fa = point_fingerprints(a);
        fb = point_fingerprints(b);
        phi.assign(a.n, -1);
        used.assign(a.n, 0);
    }

    bool consistent(int x) const {
        for (int u = 0; u <= x; ++u)
            for (int v = 0; v <= x; ++v) {
                int sv = a.s(u, v), tv = a.t(u, v);
                if (sv <= x && phi[sv] != b.s(phi[u], phi[v]))
                    return false;
                if (tv <= x && phi[tv] != b.t(phi[u], phi[v]))
                    return false;
            }
        return true;
    }

    bool search(int x) {
        if (x == a.n) {
            // Partial checks only covered values with fixed images; verify
            // the full table equality once.
            Perm p(phi);
            if (relabel(a, p) == b) {
                found.push_back(std::move(p));
                return !collect_all;
            }
            return false;
        }
        for (int y = 0; y < a.n; ++y) {
            if (used[y] || fa[x] != fb[y])
                continue;
            phi[x] = y;
            used[y] = 1;
            if (consistent(x) && search(x + 1))
                return true;
            phi[x] = -1;
            used[y] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Perm> find_isomorphism(const Solution& a, const Solution& b) {
    if (a.n != b.n)
        return std::nullopt;
    IsoSearch srch(a, b);
    srch.search(0);
    if (srch.found.empty())
        return std::nullopt;
    return srch.found.front();
}

PermGroup automorphism_group(const Solution& s) {
    IsoSearch srch(s, s);
    srch.collect_all = true;
    srch.search(0);
    std::sort(srch.found.begin(), srch.found.end());
    PermGroup g;
    g.degree = s.n;
    g.elements = std::move(srch.found);
    // The automorphisms form a group; expose a reduced generating set.
    std::vector<Perm> gens;
    {
        std::vector<Perm> have{Perm::identity(s.n)};
        for (const Perm& e : g.elements) {
            if (std::binary_search(have.begin(), have.end(), e))
                continue;
            gens.push_back(e);
            have = closure(s.n, gens).elements;
        }
    }
    g.generators = std::move(gens);
    return g;
}

std::vector<Perm> all_isomorphisms(const Solution& a, const Solution& b) {
    if (a.n != b.n)
        return {};
    auto first = find_isomorphism(a, b);
    if (!first)
        return {};
    // Every isomorphism a -> b factors as first o (automorphism of a).
    std::vector<Perm> isos;
    for (const Perm& aut : automorphism_group(a).elements)
        isos.push_back(compose(*first, aut));
    std::sort(isos.begin(), isos.end());
    return isos;
}

Solution canonical_form(const Solution& s) {
    const int n = s.n;
    if (n == 0)
        return s;
    std::vector<std::vector<int>> fps = point_fingerprints(s);

    // Points sorted by fingerprint; equal-fingerprint runs form blocks whose
    // members may occupy the block's label range in any order.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        if (fps[p] != fps[q])
            return fps[p] < fps[q];
        return p < q;
    });
    std::vector<std::pair<int, int>> blocks; // [begin, end) in order[]
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && fps[order[j]] == fps[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    std::vector<int> phi(n);       // candidate relabeling: new label of old point
    std::vector<int> best;         // flattened sigma||tau tables of the best candidate
    std::vector<int> cand(2 * n * n);
    Solution result;

    auto consider = [&]() {
        for (int x = 0; x < n; ++x) {
            int row = phi[x] * n;
            for (int y = 0; y < n; ++y)
                cand[row + phi[y]] = phi[s.s(x, y)];
            row += n * n;
            for (int y = 0; y < n; ++y)
                cand[row + phi[y]] = phi[s.t(x, y)];
        }
        if (best.empty() || cand < best)
            best = cand;
    };

    // Odometer over per-block arrangements via next_permutation on the
    // block's point list (order[] holds points; position i gets label i).
    std::vector<std::vector<int>> arr;
    for (auto [b, e] : blocks)
        arr.emplace_back(order.begin() + b, order.begin() + e);
    while (true) {
        {
            int pos = 0;
            for (const auto& blk : arr)
                for (int p : blk)
                    phi[p] = pos++;
        }
        consider();
        size_t k = 0;
        for (; k < arr.size(); ++k) {
            if (std::next_permutation(arr[k].begin(), arr[k].end()))
                break;
            // wrapped around to sorted order; carry to the next block
        }
        if (k == arr.size())
            break;
    }

    std::vector<std::vector<int>> sig(n, std::vector<int>(n)), tau(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            sig[x][y] = best[x * n + y];
            tau[x][y] = best[n * n + x * n + y];
        }
    return make_solution(n, sig, tau);
}

} // namespace ybe
