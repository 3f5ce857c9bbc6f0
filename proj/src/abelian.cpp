#include "ybe/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ybe {

AbelianGroup::AbelianGroup(std::vector<int> fs) : factors(std::move(fs)) {
    for (int f : factors) {
        if (f < 2)
            throw std::invalid_argument("cyclic factor must be >= 2");
        order *= f;
    }
}

std::vector<int> AbelianGroup::decode(int e) const {
    std::vector<int> t(factors.size());
    for (size_t k = 0; k < factors.size(); ++k) {
        t[k] = e % factors[k];
        e /= factors[k];
    }
    return t;
}

int AbelianGroup::encode(const std::vector<int>& tuple) const {
    int e = 0;
    for (size_t k = factors.size(); k-- > 0;)
        e = e * factors[k] + tuple[k];
    return e;
}

int AbelianGroup::add(int a, int b) const {
    std::vector<int> ta = decode(a), tb = decode(b);
    for (size_t k = 0; k < factors.size(); ++k)
        ta[k] = (ta[k] + tb[k]) % factors[k];
    return encode(ta);
}

int AbelianGroup::neg(int a) const {
    std::vector<int> t = decode(a);
    for (size_t k = 0; k < factors.size(); ++k)
        t[k] = (factors[k] - t[k]) % factors[k];
    return encode(t);
}

int AbelianGroup::subgroup_order(const std::vector<int>& gens) const {
    std::set<int> sub{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier)
            for (int g : gens) {
                int v = add(e, g);
                if (sub.insert(v).second)
                    next.push_back(v);
            }
        frontier = std::move(next);
    }
    return static_cast<int>(sub.size());
}

namespace {

// Partitions of e, each sorted descending.
std::vector<std::vector<int>> int_partitions(int e) {
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
    rec(rec, e, e);
    return out;
}

} // namespace

std::vector<AbelianGroup> abelian_groups(int m) {
    if (m < 1)
        throw std::invalid_argument("group order must be positive");
    // Factorize and pick one partition of each prime's exponent.
    std::vector<std::pair<int, int>> pe;
    int rest = m;
    for (int p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            pe.emplace_back(p, e);
        }
    if (rest > 1)
        pe.emplace_back(rest, 1);

    std::vector<std::vector<int>> factor_lists{{}};
    for (auto [p, e] : pe) {
        std::vector<std::vector<int>> grown;
        for (const auto& parts : int_partitions(e))
            for (const auto& base : factor_lists) {
                std::vector<int> fl = base;
                for (int part : parts) {
                    int q = 1;
                    for (int i = 0; i < part; ++i)
                        q *= p;
                    fl.push_back(q);
                }
                grown.push_back(std::move(fl));
            }
        factor_lists = std::move(grown);
    }
    for (auto& fl : factor_lists)
        std::sort(fl.begin(), fl.end());
    std::sort(factor_lists.begin(), factor_lists.end());
    std::vector<AbelianGroup> out;
    out.reserve(factor_lists.size());
    for (auto& fl : factor_lists)
        out.emplace_back(std::move(fl));
    return out;
}

} // namespace ybe
