#include "ybe/retract.hpp"

#include <stdexcept>

namespace ybe {

namespace {

Partition partition_by(const Solution& s, bool use_sigma, bool use_tau) {
    Partition p;
    p.n = s.n;
    p.class_of.assign(s.n, -1);
    for (int x = 0; x < s.n; ++x) {
        if (p.class_of[x] != -1)
            continue;
        int cls = p.size();
        p.classes.push_back({x});
        p.class_of[x] = cls;
        for (int y = x + 1; y < s.n; ++y) {
            if (p.class_of[y] != -1)
                continue;
            bool same = (!use_sigma || s.sigma[x] == s.sigma[y]) &&
                        (!use_tau || s.tau[x] == s.tau[y]);
            if (same) {
                p.class_of[y] = cls;
                p.classes[cls].push_back(y);
            }
        }
    }
    return p;
}

} // namespace

Partition sim_partition(const Solution& s) { return partition_by(s, true, false); }
Partition backsim_partition(const Solution& s) { return partition_by(s, false, true); }
Partition approx_partition(const Solution& s) { return partition_by(s, true, true); }

Solution retraction(const Solution& s) {
    Partition p = approx_partition(s);
    const int m = p.size();
    std::vector<std::vector<int>> sig(m, std::vector<int>(m, -1));
    std::vector<std::vector<int>> tau(m, std::vector<int>(m, -1));
    // The quotient table value for a pair of classes must not depend on the
    // chosen representatives; scan all pairs of points to verify.
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            int cx = p.class_of[x], cy = p.class_of[y];
            int sv = p.class_of[s.s(x, y)];
            int tv = p.class_of[s.t(x, y)];
            if (sig[cx][cy] == -1)
                sig[cx][cy] = sv;
            else if (sig[cx][cy] != sv)
                throw std::logic_error("internal error: retraction relation is not a sigma-congruence");
            if (tau[cx][cy] == -1)
                tau[cx][cy] = tv;
            else if (tau[cx][cy] != tv)
                throw std::logic_error("internal error: retraction relation is not a tau-congruence");
        }
    return make_solution(m, sig, tau);
}

std::optional<int> multipermutation_level(const Solution& s, int cap) {
    if (cap < 0)
        cap = s.n;
    Solution cur = s;
    int level = 0;
    while (cur.n > 1) {
        if (level >= cap)
            return std::nullopt;
        Solution next = retraction(cur);
        if (next.n == cur.n)
            return std::nullopt; // fixpoint with more than one element
        cur = std::move(next);
        ++level;
    }
    return level;
}

bool is_irretractable(const Solution& s) {
    return s.n > 1 && approx_partition(s).size() == s.n;
}

} // namespace ybe
