#include "ybe/solution.hpp"

#include <stdexcept>

namespace ybe {

bool table_less(const Solution& a, const Solution& b) {
    if (a.n != b.n)
        return a.n < b.n;
    for (int x = 0; x < a.n; ++x)
        if (a.sigma[x] != b.sigma[x])
            return a.sigma[x] < b.sigma[x];
    for (int x = 0; x < a.n; ++x)
        if (a.tau[x] != b.tau[x])
            return a.tau[x] < b.tau[x];
    return false;
}

Solution make_solution(int n, const std::vector<std::vector<int>>& sigma,
                       const std::vector<std::vector<int>>& tau) {
    if (n < 0)
        throw std::invalid_argument("solution size must be non-negative");
    if (static_cast<int>(sigma.size()) != n || static_cast<int>(tau.size()) != n)
        throw std::invalid_argument("sigma/tau must have one row per point");
    Solution s;
    s.n = n;
    s.sigma.reserve(n);
    s.tau.reserve(n);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(sigma[x].size()) != n)
            throw std::invalid_argument("sigma row " + std::to_string(x) + " has wrong length");
        try {
            s.sigma.emplace_back(sigma[x]);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sigma row " + std::to_string(x) + " is not a bijection: " + e.what());
        }
    }
    for (int y = 0; y < n; ++y) {
        if (static_cast<int>(tau[y].size()) != n)
            throw std::invalid_argument("tau row " + std::to_string(y) + " has wrong length");
        try {
            s.tau.emplace_back(tau[y]);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("tau row " + std::to_string(y) + " is not a bijection: " + e.what());
        }
    }
    return s;
}

Solution trivial_solution(int n) {
    Solution s;
    s.n = n;
    s.sigma.assign(n, Perm::identity(n));
    s.tau.assign(n, Perm::identity(n));
    return s;
}

Solution permutational_solution(int n, const Perm& f, const Perm& g) {
    if (f.degree() != n || g.degree() != n)
        throw std::invalid_argument("permutational_solution: degree mismatch");
    if (!commutes(f, g))
        throw std::invalid_argument("permutational_solution: rows must commute");
    Solution s;
    s.n = n;
    s.sigma.assign(n, f);
    s.tau.assign(n, g);
    return s;
}

bool braid_holds_by_triples(const Solution& s) {
    return !braid_violation(s).has_value();
}

std::optional<std::array<int, 3>> braid_violation(const Solution& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // (id x r)(r x id)(id x r) applied to (x,y,z)
                int b1 = s.s(y, z), c1 = s.t(z, y);
                int a2 = s.s(x, b1), b2 = s.t(b1, x);
                int l1 = a2, l2 = s.s(b2, c1), l3 = s.t(c1, b2);
                // (r x id)(id x r)(r x id) applied to (x,y,z)
                int p1 = s.s(x, y), q1 = s.t(y, x);
                int q2 = s.s(q1, z), r2 = s.t(z, q1);
                int m1 = s.s(p1, q2), m2 = s.t(q2, p1), m3 = r2;
                if (l1 != m1 || l2 != m2 || l3 != m3)
                    return std::array<int, 3>{x, y, z};
            }
    return std::nullopt;
}

bool braid_holds_by_identities(const Solution& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Perm& a = s.sigma[x];
            const Perm& b = s.sigma[y];
            const Perm& c = s.sigma[s.s(x, y)];
            const Perm& d = s.sigma[s.t(y, x)];
            for (int z = 0; z < n; ++z)
                if (a(b(z)) != c(d(z)))
                    return false;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (s.t(s.s(s.t(y, x), z), s.s(x, y)) != s.s(s.t(s.s(y, z), x), s.t(z, y)))
                    return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Perm& a = s.tau[x];
            const Perm& b = s.tau[y];
            const Perm& c = s.tau[s.t(x, y)];
            const Perm& d = s.tau[s.s(y, x)];
            for (int z = 0; z < n; ++z)
                if (a(b(z)) != c(d(z)))
                    return false;
        }
    return true;
}

bool check_braid(const Solution& s) {
    bool direct = braid_holds_by_triples(s);
    bool derived = braid_holds_by_identities(s);
    if (direct != derived)
        throw std::logic_error("internal error: braid routes disagree");
    return direct;
}

bool is_involutive(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            int u = s.s(x, y), v = s.t(y, x);
            if (s.s(u, v) != x || s.t(v, u) != y)
                return false;
        }
    return true;
}

bool is_square_free(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        if (s.s(x, x) != x || s.t(x, x) != x)
            return false;
    return true;
}

bool satisfies_lri(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            if (s.tau[x](s.s(x, y)) != y)
                return false;
    return true;
}

bool is_left_distributive(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            const Perm& lhs1 = s.sigma[x];
            const Perm& lhs2 = s.sigma[y];
            const Perm& rhs1 = s.sigma[s.s(x, y)];
            const Perm& rhs2 = s.sigma[x];
            for (int z = 0; z < s.n; ++z)
                if (lhs1(lhs2(z)) != rhs1(rhs2(z)))
                    return false;
        }
    return true;
}

bool is_right_distributive(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            const Perm& lhs1 = s.tau[x];
            const Perm& lhs2 = s.tau[y];
            const Perm& rhs1 = s.tau[s.t(x, y)];
            const Perm& rhs2 = s.tau[x];
            for (int z = 0; z < s.n; ++z)
                if (lhs1(lhs2(z)) != rhs1(rhs2(z)))
                    return false;
        }
    return true;
}

Solution inverse_solution(const Solution& s) {
    const int n = s.n;
    // Invert r as a map on X x X.
    std::vector<std::vector<int>> su(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> tv(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int u = s.s(x, y), v = s.t(y, x);
            if (su[u][v] != -1)
                throw std::invalid_argument("inverse_solution: r is not bijective on X x X");
            su[u][v] = x; // r^{-1}(u,v) = (x, y) = (hat-sigma_u(v), hat-tau_v(u))
            tv[u][v] = y;
        }
    std::vector<std::vector<int>> hs(n, std::vector<int>(n));
    std::vector<std::vector<int>> ht(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            hs[u][v] = su[u][v];
            ht[v][u] = tv[u][v];
        }
    Solution inv = make_solution(n, hs, ht);
    // Defining identities of the inverse tables; these hold for any bijective
    // r by construction, so a failure is an internal error.
    std::vector<Perm> sig_inv(n), tau_inv(n), hsig_inv(n), htau_inv(n);
    for (int i = 0; i < n; ++i) {
        sig_inv[i] = s.sigma[i].inverse();
        tau_inv[i] = s.tau[i].inverse();
        hsig_inv[i] = inv.sigma[i].inverse();
        htau_inv[i] = inv.tau[i].inverse();
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (inv.t(y, x) != sig_inv[inv.s(x, y)](x))
                throw std::logic_error("internal error: inverse identity (hat-tau) fails");
            if (inv.s(x, y) != tau_inv[inv.t(y, x)](y))
                throw std::logic_error("internal error: inverse identity (hat-sigma) fails");
            if (hsig_inv[s.s(x, y)](x) != s.t(y, x))
                throw std::logic_error("internal error: inverse identity (tau) fails");
            if (htau_inv[s.t(y, x)](y) != s.s(x, y))
                throw std::logic_error("internal error: inverse identity (sigma) fails");
        }
    }
    return inv;
}

Solution relabel(const Solution& s, const Perm& phi) {
    if (phi.degree() != s.n)
        throw std::invalid_argument("relabel: degree mismatch");
    const int n = s.n;
    std::vector<std::vector<int>> sig(n, std::vector<int>(n));
    std::vector<std::vector<int>> tau(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            sig[phi(x)][phi(y)] = phi(s.s(x, y));
            tau[phi(x)][phi(y)] = phi(s.t(x, y));
        }
    return make_solution(n, sig, tau);
}

} // namespace ybe
