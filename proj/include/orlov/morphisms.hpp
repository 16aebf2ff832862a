#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "orlov/nakayama.hpp"

namespace orlov {

using Scalar = boost::rational<long long>;

// Morphism between direct sums of interval modules over a linear algebra.
// coeff[s][t] multiplies the canonical map from source summand s to target
// summand t (surjection onto the common interval followed by its inclusion).
struct Morphism {
    ModuleSum source;
    ModuleSum target;
    std::vector<std::vector<Scalar>> coeff;

    // Checks shapes and that nonzero entries sit where Hom is nonzero.
    static Morphism make(const Algebra& A, ModuleSum source, ModuleSum target,
                         std::vector<std::vector<Scalar>> coeff);
    static Morphism zero(ModuleSum source, ModuleSum target);
    static Morphism identity(const ModuleSum& M);
    // The canonical map X -> Y; requires Hom(X,Y) != 0.
    static Morphism basis(const Algebra& A, Uniserial X, Uniserial Y);

    bool is_zero() const;
    bool operator==(const Morphism&) const = default;
};

// Canonical [a,b] -> [c,d] -> [e,f] composes to the canonical map iff a <= f.
bool basis_composite_nonzero(Uniserial X, Uniserial Y, Uniserial Z);

// g o f; requires f.target == g.source.
Morphism compose(const Morphism& g, const Morphism& f);

// f lies in the radical of the module category: no component between
// isomorphic indecomposables is invertible.
bool is_radical_morphism(const Morphism& f);

}  // namespace orlov
