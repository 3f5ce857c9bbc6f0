#include "ybe/classify.hpp"

#include <set>
#include <stdexcept>

#include "ybe/retract.hpp"

namespace ybe {

bool is_2_reductive(const Solution& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.sigma[s.s(x, y)] != s.sigma[y]) return false;
            if (s.tau[s.t(x, y)] != s.tau[y]) return false;
            if (s.sigma[s.t(x, y)] != s.sigma[y]) return false;
            if (s.tau[s.s(x, y)] != s.tau[y]) return false;
        }
    return true;
}

bool is_2_permutational(const Solution& s) {
    const int n = s.n;
    // Constancy over the first subscript: rows indexed by sigma_x(z) (etc.)
    // must not depend on x.
    for (int z = 0; z < n; ++z) {
        const Perm& s_ref = s.sigma[s.s(0, z)];
        const Perm& t_ref = s.tau[s.t(0, z)];
        const Perm& st_ref = s.sigma[s.t(0, z)];
        const Perm& ts_ref = s.tau[s.s(0, z)];
        for (int x = 1; x < n; ++x) {
            if (s.sigma[s.s(x, z)] != s_ref) return false;
            if (s.tau[s.t(x, z)] != t_ref) return false;
            if (s.sigma[s.t(x, z)] != st_ref) return false;
            if (s.tau[s.s(x, z)] != ts_ref) return false;
        }
    }
    return true;
}

namespace {

Perm diagonal_map(const Solution& s, bool use_sigma) {
    const int n = s.n;
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
        const Perm inv = (use_sigma ? s.sigma[x] : s.tau[x]).inverse();
        img[x] = inv(x);
    }
    std::vector<char> seen(n, 0);
    for (int v : img) {
        if (seen[v])
            throw std::invalid_argument("diagonal map is not a bijection");
        seen[v] = 1;
    }
    return Perm(std::move(img));
}

void assert_diagonal_inverses(const Solution& s, const Perm& U, const Perm& T) {
    // Closed-form inverses valid in the 2-permutational case:
    //   U^{-1}(x) = sigma_{tau_x^{-1}(x)}(x),  T^{-1}(x) = tau_{sigma_x^{-1}(x)}(x)
    const Perm Uinv = U.inverse();
    const Perm Tinv = T.inverse();
    for (int x = 0; x < s.n; ++x) {
        int tx = s.tau[x].inverse()(x);
        int sx = s.sigma[x].inverse()(x);
        if (Uinv(x) != s.s(tx, x))
            throw std::logic_error("internal error: closed-form U^{-1} fails");
        if (Tinv(x) != s.t(sx, x))
            throw std::logic_error("internal error: closed-form T^{-1} fails");
    }
    if (!commutes(U, T))
        throw std::logic_error("internal error: diagonal maps fail to commute");
}

} // namespace

Perm diagonal_U(const Solution& s) {
    Perm U = diagonal_map(s, true);
    if (is_2_permutational(s))
        assert_diagonal_inverses(s, U, diagonal_map(s, false));
    return U;
}

Perm diagonal_T(const Solution& s) {
    Perm T = diagonal_map(s, false);
    if (is_2_permutational(s))
        assert_diagonal_inverses(s, diagonal_map(s, true), T);
    return T;
}

bool is_automorphism(const Solution& s, const Perm& phi) {
    if (phi.degree() != s.n)
        throw std::invalid_argument("is_automorphism: degree mismatch");
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            if (phi(s.s(x, y)) != s.s(phi(x), phi(y)))
                return false;
            if (phi(s.t(x, y)) != s.t(phi(x), phi(y)))
                return false;
        }
    return true;
}

PermPairGroup permutation_group(const Solution& s) {
    std::set<PermPair> gens;
    for (int x = 0; x < s.n; ++x)
        gens.insert(PermPair{s.sigma[x], s.tau[x].inverse()});
    return pair_closure(s.n, std::vector<PermPair>(gens.begin(), gens.end()));
}

PermPairGroup displacement_group(const Solution& s) {
    std::set<PermPair> gens;
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            PermPair p{compose(s.sigma[x], s.sigma[y].inverse()),
                       compose(s.tau[x].inverse(), s.tau[y])};
            if (!p.left.is_identity() || !p.right.is_identity())
                gens.insert(std::move(p));
        }
    return pair_closure(s.n, std::vector<PermPair>(gens.begin(), gens.end()));
}

std::vector<std::pair<std::string, bool>> check_2perm_identity_suite(const Solution& sol) {
    const int n = sol.n;
    std::vector<Perm> sinv(n), tinv(n);
    for (int i = 0; i < n; ++i) {
        sinv[i] = sol.sigma[i].inverse();
        tinv[i] = sol.tau[i].inverse();
    }
    auto S = [&](int i) -> const Perm& { return sol.sigma[i]; };
    auto T = [&](int i) -> const Perm& { return sol.tau[i]; };

    auto all2 = [&](auto f) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!f(a, b))
                    return false;
        return true;
    };
    auto all3 = [&](auto f) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!f(a, b, c))
                        return false;
        return true;
    };
    auto all4 = [&](auto f) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        if (!f(a, b, c, d))
                            return false;
        return true;
    };
    auto eq2 = [&](const Perm& p1, const Perm& p2, const Perm& q1, const Perm& q2) {
        for (int w = 0; w < n; ++w)
            if (p1(p2(w)) != q1(q2(w)))
                return false;
        return true;
    };
    auto eq3 = [&](const Perm& p1, const Perm& p2, const Perm& p3,
                   const Perm& q1, const Perm& q2, const Perm& q3) {
        for (int w = 0; w < n; ++w)
            if (p1(p2(p3(w))) != q1(q2(q3(w))))
                return false;
        return true;
    };

    std::vector<std::pair<std::string, bool>> out;
    auto add = [&](std::string name, bool ok) { out.emplace_back(std::move(name), ok); };

    // Defining families.
    add("s[s_x(z)] = s[s_y(z)]",
        all3([&](int x, int y, int z) { return S(sol.s(x, z)) == S(sol.s(y, z)); }));
    add("t[t_x(z)] = t[t_y(z)]",
        all3([&](int x, int y, int z) { return T(sol.t(x, z)) == T(sol.t(y, z)); }));
    add("s[t_x(z)] = s[t_y(z)]",
        all3([&](int x, int y, int z) { return S(sol.t(x, z)) == S(sol.t(y, z)); }));
    add("t[s_x(z)] = t[s_y(z)]",
        all3([&](int x, int y, int z) { return T(sol.s(x, z)) == T(sol.s(y, z)); }));

    // Single-subscript consequences.
    add("s[t_x^-1(y)] = s[s_z(y)]",
        all3([&](int x, int y, int z) { return S(tinv[x](y)) == S(sol.s(z, y)); }));
    add("t[s_x^-1(y)] = t[t_z(y)]",
        all3([&](int x, int y, int z) { return T(sinv[x](y)) == T(sol.t(z, y)); }));
    add("s[t_x(s_z(y))] = s_y",
        all3([&](int x, int y, int z) { return S(sol.t(x, sol.s(z, y))) == S(y); }));
    add("s[s_z(t_x(y))] = s_y",
        all3([&](int x, int y, int z) { return S(sol.s(z, sol.t(x, y))) == S(y); }));
    add("t[s_x(t_z(y))] = t_y",
        all3([&](int x, int y, int z) { return T(sol.s(x, sol.t(z, y))) == T(y); }));
    add("t[t_z(s_x(y))] = t_y",
        all3([&](int x, int y, int z) { return T(sol.t(z, sol.s(x, y))) == T(y); }));
    add("s[s_y^-1(x)] = s[t_z(x)]",
        all3([&](int x, int y, int z) { return S(sinv[y](x)) == S(sol.t(z, x)); }));
    add("t[t_y^-1(x)] = t[s_z(x)]",
        all3([&](int x, int y, int z) { return T(tinv[y](x)) == T(sol.s(z, x)); }));

    // Composition consequences.
    add("s_y^-1 s_x = s[t_z(x)] s[t_b(y)]^-1",
        all4([&](int x, int y, int z, int b) {
            return eq2(sinv[y], S(x), S(sol.t(z, x)), sinv[sol.t(b, y)]);
        }));
    add("t_x t_y^-1 = t[s_b^-1(y)]^-1 t[s_z^-1(x)]",
        all4([&](int x, int y, int z, int b) {
            return eq2(T(x), tinv[y], tinv[sinv[b](y)], T(sinv[z](x)));
        }));
    add("s_x t_z = t[s_a(z)] s[s_b(x)]",
        all4([&](int x, int z, int a, int b) {
            return eq2(S(x), T(z), T(sol.s(a, z)), S(sol.s(b, x)));
        }));
    add("s_x^-1 t_z = t[s_a^-1(z)] s[s_b(x)]^-1",
        all4([&](int x, int z, int a, int b) {
            return eq2(sinv[x], T(z), T(sinv[a](z)), sinv[sol.s(b, x)]);
        }));
    add("s[s_x(y)] s[s_a(z)] = s[s_x(s_a(z))] s_y",
        all4([&](int x, int y, int a, int z) {
            return eq2(S(sol.s(x, y)), S(sol.s(a, z)), S(sol.s(x, sol.s(a, z))), S(y));
        }));
    add("t[t_x(y)] t[t_a(z)] = t[t_x(t_a(z))] t_y",
        all4([&](int x, int y, int a, int z) {
            return eq2(T(sol.t(x, y)), T(sol.t(a, z)), T(sol.t(x, sol.t(a, z))), T(y));
        }));

    // Commutation laws.
    add("s_a s_y^-1 s_x = s_x s_y^-1 s_a",
        all3([&](int a, int y, int x) {
            return eq3(S(a), sinv[y], S(x), S(x), sinv[y], S(a));
        }));
    add("t_a t_y^-1 t_x = t_x t_y^-1 t_a",
        all3([&](int a, int y, int x) {
            return eq3(T(a), tinv[y], T(x), T(x), tinv[y], T(a));
        }));
    add("(s_a s_y^-1)(t_b t_y^-1) = (t_b t_y^-1)(s_a s_y^-1)",
        all3([&](int a, int b, int y) {
            Perm left = compose(S(a), sinv[y]);
            Perm right = compose(T(b), tinv[y]);
            return commutes(left, right);
        }));

    // Entropic laws.
    add("s[s_x(y)] s_z = s[s_x(z)] s_y",
        all3([&](int x, int y, int z) {
            return eq2(S(sol.s(x, y)), S(z), S(sol.s(x, z)), S(y));
        }));
    add("t[t_x(y)] t_z = t[t_x(z)] t_y",
        all3([&](int x, int y, int z) {
            return eq2(T(sol.t(x, y)), T(z), T(sol.t(x, z)), T(y));
        }));
    add("t[s_z(u)] s_x = s[t_z(x)] t_u",
        all3([&](int z, int u, int x) {
            return eq2(T(sol.s(z, u)), S(x), S(sol.t(z, x)), T(u));
        }));

    return out;
}

std::array<bool, 6> prop_six_equivalents(const Solution& s) {
    std::array<bool, 6> r{};
    r[0] = is_2_reductive(s);
    r[1] = is_left_distributive(s) && is_right_distributive(s);

    bool all_rows_aut = true;
    for (int x = 0; x < s.n && all_rows_aut; ++x)
        all_rows_aut = is_automorphism(s, s.sigma[x]) && is_automorphism(s, s.tau[x]);
    r[2] = all_rows_aut;

    const Perm U = diagonal_map(s, true);
    const Perm T = diagonal_map(s, false);

    std::set<Perm> row_gens;
    for (int x = 0; x < s.n; ++x) {
        row_gens.insert(s.sigma[x]);
        row_gens.insert(s.tau[x]);
    }
    row_gens.insert(U);
    row_gens.insert(T);
    r[3] = is_abelian(closure(s.n, std::vector<Perm>(row_gens.begin(), row_gens.end())));

    std::set<PermPair> pair_gens;
    for (int x = 0; x < s.n; ++x)
        pair_gens.insert(PermPair{s.sigma[x], s.tau[x].inverse()});
    pair_gens.insert(PermPair{U.inverse(), T});
    r[4] = is_abelian(pair_closure(s.n, std::vector<PermPair>(pair_gens.begin(), pair_gens.end())));

    bool diag_comm = true;
    for (int x = 0; x < s.n && diag_comm; ++x)
        diag_comm = commutes(U, s.sigma[x]) && commutes(T, s.tau[x]);
    r[5] = diag_comm;

    return r;
}

ClassificationReport classify_solution(const Solution& s) {
    ClassificationReport r;
    r.braid = check_braid(s);
    r.involutive = is_involutive(s);
    r.square_free = is_square_free(s);
    r.lri = satisfies_lri(s);
    r.left_distributive = is_left_distributive(s);
    r.right_distributive = is_right_distributive(s);
    r.two_reductive = is_2_reductive(s);
    r.two_permutational = is_2_permutational(s);
    r.irretractable = is_irretractable(s);
    if (r.braid) {
        r.mpl = multipermutation_level(s);
        r.dis_abelian = is_abelian(displacement_group(s));
    }
    return r;
}

} // namespace ybe
