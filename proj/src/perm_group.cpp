#include "ybe/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ybe {

namespace {

constexpr size_t kClosureCap = 2'000'000;

// Generic BFS closure over a value type with compose().
template <typename T>
std::vector<T> close_under_composition(const T& id, const std::vector<T>& gens) {
    std::set<T> elems{id};
    std::vector<T> frontier{id};
    while (!frontier.empty()) {
        std::vector<T> next;
        for (const T& e : frontier) {
            for (const T& g : gens) {
                T prod = compose(e, g);
                if (elems.insert(prod).second) {
                    if (elems.size() > kClosureCap)
                        throw std::runtime_error("group closure exceeds element cap");
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<T>(elems.begin(), elems.end());
}

// Greedy minimal-ish generating set: keep an element only if it is not already
// generated by the ones kept so far.
std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements) {
    std::vector<Perm> gens;
    std::set<Perm> have{Perm::identity(degree)};
    for (const Perm& e : elements) {
        if (have.count(e))
            continue;
        gens.push_back(e);
        auto closed = close_under_composition(Perm::identity(degree), gens);
        have = std::set<Perm>(closed.begin(), closed.end());
    }
    return gens;
}

} // namespace

PermGroup closure(int degree, std::vector<Perm> generators) {
    for (const Perm& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("closure: generator degree mismatch");
    PermGroup grp;
    grp.degree = degree;
    grp.elements = close_under_composition(Perm::identity(degree), generators);
    grp.generators = std::move(generators);
    return grp;
}

bool contains(const PermGroup& g, const Perm& p) {
    return std::binary_search(g.elements.begin(), g.elements.end(), p);
}

bool is_abelian(const PermGroup& g) {
    // Pairwise scan for small orders; generator pairs suffice in general.
    if (g.elements.size() <= 1000) {
        for (size_t i = 0; i < g.elements.size(); ++i)
            for (size_t j = i + 1; j < g.elements.size(); ++j)
                if (!commutes(g.elements[i], g.elements[j]))
                    return false;
        return true;
    }
    for (size_t i = 0; i < g.generators.size(); ++i)
        for (size_t j = i + 1; j < g.generators.size(); ++j)
            if (!commutes(g.generators[i], g.generators[j]))
                return false;
    return true;
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g) {
    std::vector<std::vector<Perm>> classes;
    std::set<Perm> visited;
    for (const Perm& e : g.elements) {
        if (visited.count(e))
            continue;
        std::set<Perm> orbit;
        for (const Perm& h : g.elements)
            orbit.insert(compose(compose(h, e), h.inverse()));
        std::vector<Perm> cls(orbit.begin(), orbit.end());
        visited.insert(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    // Elements are scanned in sorted order, so each class surfaces at its
    // minimal member and the class list is ordered by representative already.
    return classes;
}

PermGroup centralizer(const PermGroup& g, const Perm& p) {
    if (!contains(g, p))
        throw std::invalid_argument("centralizer: element not in group");
    PermGroup sub;
    sub.degree = g.degree;
    for (const Perm& e : g.elements)
        if (commutes(e, p))
            sub.elements.push_back(e);
    sub.generators = reduce_generators(g.degree, sub.elements);
    return sub;
}

PermGroup symmetric_group(int n) {
    std::vector<Perm> gens;
    if (n >= 2)
        gens.push_back(Perm::from_cycles(n, "(0,1)"));
    if (n >= 3) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i)
            img[i] = (i + 1) % n;
        gens.push_back(Perm(std::move(img)));
    }
    return closure(n, std::move(gens));
}

PermPairGroup pair_closure(int degree, std::vector<PermPair> generators) {
    for (const PermPair& g : generators)
        if (g.left.degree() != degree || g.right.degree() != degree)
            throw std::invalid_argument("pair_closure: generator degree mismatch");
    PermPairGroup grp;
    grp.degree = degree;
    PermPair id{Perm::identity(degree), Perm::identity(degree)};
    grp.elements = close_under_composition(id, generators);
    grp.generators = std::move(generators);
    return grp;
}

bool is_abelian(const PermPairGroup& g) {
    auto pair_commutes = [](const PermPair& a, const PermPair& b) {
        return commutes(a.left, b.left) && commutes(a.right, b.right);
    };
    if (g.elements.size() <= 1000) {
        for (size_t i = 0; i < g.elements.size(); ++i)
            for (size_t j = i + 1; j < g.elements.size(); ++j)
                if (!pair_commutes(g.elements[i], g.elements[j]))
                    return false;
        return true;
    }
    for (size_t i = 0; i < g.generators.size(); ++i)
        for (size_t j = i + 1; j < g.generators.size(); ++j)
            if (!pair_commutes(g.generators[i], g.generators[j]))
                return false;
    return true;
}

} // namespace ybe
