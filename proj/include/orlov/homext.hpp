#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlov/indec_set.hpp"
#include "orlov/nakayama.hpp"

namespace orlov {

int hom_dim(const Algebra& A, Uniserial X, Uniserial Y);

// Whether a non-split 0 -> U -> E -> V -> 0 exists (linear shapes).
bool ext1_nonzero(const Algebra& A, Uniserial V, Uniserial U);
// Summands of the middle term of the non-split extension, empty if Ext vanishes.
// For V = M[a,b], U = M[c,d] this is M[a,d] (+ M[c,b] when c <= b).
std::vector<Uniserial> extension_summands(const Algebra& A, Uniserial V, Uniserial U);

// With quotient V = M[a,b] and two pieces S1 = M[c1,d1], S2 = M[c2,d2] of the
// sub that both extend V, c1 < c2 and d1 > d2, one middle term contains
// M[c1,d2].
std::optional<Uniserial> staircase_summand(const Algebra& A, Uniserial V, Uniserial S1, Uniserial S2);

struct ArArrow {
    enum class Kind { Plus, Minus };
    Kind kind;
    int i, j;  // the source is M[i,j]

    Uniserial source() const { return interval(i, j); }
    Uniserial target() const { return kind == Kind::Plus ? interval(i - 1, j) : interval(i, j - 1); }
    std::string label() const;
    auto operator<=>(const ArArrow&) const = default;
};

inline ArArrow f_plus(int i, int j) { return {ArArrow::Kind::Plus, i, j}; }
inline ArArrow f_minus(int i, int j) { return {ArArrow::Kind::Minus, i, j}; }

struct ArQuiver {
    std::vector<Uniserial> nodes;
    std::vector<ArArrow> arrows;
    std::string to_dot() const;
};

// Linear hereditary only.
ArQuiver ar_quiver(const Algebra& A);

IndecSet sub_closure(const Algebra& A, const IndecSet& T);
IndecSet fac_closure(const Algebra& A, const IndecSet& T);

}  // namespace orlov
