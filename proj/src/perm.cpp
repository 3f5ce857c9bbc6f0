#include "ybe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace ybe {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(n, 0);
    for (int v : img_) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("permutation image out of range: " + std::to_string(v));
        if (seen[v])
            throw std::invalid_argument("permutation image repeated: " + std::to_string(v));
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x)
        inv[img_[x]] = x;
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (img_[x] != x)
            return false;
    return true;
}

std::string Perm::cycles() const {
    const int n = degree();
    std::vector<char> seen(n, 0);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || img_[s] == s)
            continue;
        out += '(';
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first)
                out += ',';
            out += std::to_string(x);
            first = false;
            x = img_[x];
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

Perm Perm::from_cycles(int n, std::string_view text, bool* letters_seen) {
    if (letters_seen)
        *letters_seen = false;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i >= text.size())
        throw std::invalid_argument("empty cycle text");

    if (text.compare(i, 2, "id") == 0) {
        i += 2;
        skip_ws();
        if (i != text.size())
            throw std::invalid_argument("trailing characters after 'id'");
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    auto parse_point = [&]() -> int {
        skip_ws();
        if (i >= text.size())
            throw std::invalid_argument("unexpected end of cycle text");
        char c = text[i];
        if (c >= 'a' && c <= 'z') {
            ++i;
            if (letters_seen)
                *letters_seen = true;
            return c - 'a';
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in cycle text");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000)
                throw std::invalid_argument("point value too large");
            ++i;
        }
        return v;
    };

    bool any_cycle = false;
    while (true) {
        skip_ws();
        if (i >= text.size())
            break;
        if (text[i] != '(')
            throw std::invalid_argument("expected '(' in cycle text");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            ++i; // "()" is the identity cycle
            any_cycle = true;
            continue;
        }
        while (true) {
            int p = parse_point();
            if (p >= n)
                throw std::invalid_argument("point " + std::to_string(p) + " out of range for degree " + std::to_string(n));
            if (used[p])
                throw std::invalid_argument("point " + std::to_string(p) + " repeated in cycle text");
            used[p] = 1;
            cyc.push_back(p);
            skip_ws();
            if (i >= text.size())
                throw std::invalid_argument("unterminated cycle");
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument(std::string("unexpected character '") + text[i] + "' in cycle");
        }
        any_cycle = true;
        for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    if (!any_cycle)
        throw std::invalid_argument("malformed cycle text");
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int x = 0; x < p.degree(); ++x)
        img[x] = p(q(x));
    Perm r;
    r.img_ = std::move(img);
    return r;
}

bool commutes(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("commutes: degree mismatch");
    for (int x = 0; x < p.degree(); ++x)
        if (p(q(x)) != q(p(x)))
            return false;
    return true;
}

std::vector<int> cycle_type(const Perm& p) {
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    std::vector<int> type;
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        int len = 0;
        int x = s;
        while (!seen[x]) {
            seen[x] = 1;
            x = p(x);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

} // namespace ybe
