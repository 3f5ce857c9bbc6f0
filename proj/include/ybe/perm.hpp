#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

// A permutation of {0..n-1}, stored as its image sequence.
// images()[x] is the image of x.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);

    // Parses cycle notation: "id", or concatenated cycles "(p1,p2,...)".
    // Points are 0-based integers or single lowercase letters (a=0, b=1, ...).
    // If letters_seen is non-null it receives whether any letter was used.
    static Perm from_cycles(int n, std::string_view text, bool* letters_seen = nullptr);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    // Cycle notation: "id" for the identity, otherwise disjoint cycles
    // ordered by smallest point, each rotated to start at its minimum.
    std::string cycles() const;

    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) = default;
    friend Perm compose(const Perm& p, const Perm& q);

private:
    std::vector<int> img_;
};

// (p * q)(x) = p(q(x))
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

bool commutes(const Perm& p, const Perm& q);

// Cycle lengths (fixed points included), sorted descending.
std::vector<int> cycle_type(const Perm& p);

} // namespace ybe
