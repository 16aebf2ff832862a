#pragma once

#include <cstdint>
#include <vector>

#include "orlov/homext.hpp"
#include "orlov/indec_set.hpp"
#include "orlov/morphisms.hpp"
#include "orlov/report.hpp"

namespace orlov {

// f is a T-coghost when g o f = 0 for every map g from its target into add T;
// a T-ghost when f o h = 0 for every map h from add T into its source.
bool is_coghost(const Algebra& A, const Morphism& f, const IndecSet& T);
bool is_ghost(const Algebra& A, const Morphism& f, const IndecSet& T);

// {M[1,j] : j <= m} together with all simples.
IndecSet tm_generator(const Algebra& A, int m);

// AR arrows that are T-coghosts (linear hereditary).
std::vector<ArArrow> irreducible_coghosts(const Algebra& A, const IndecSet& T);

// X -> sum of copies of members of T, one copy per basis map.
Morphism left_approximation(const Algebra& A, const ModuleSum& X, const IndecSet& T);
// Sum of copies of members of T -> X, one copy per basis map.
Morphism right_approximation(const Algebra& A, const ModuleSum& X, const IndecSet& T);
// Inclusion of the kernel of the left approximation.
Morphism approximation_kernel(const Algebra& A, const ModuleSum& X, const IndecSet& T);
// Projection onto the cokernel of the right approximation.
Morphism approximation_cokernel(const Algebra& A, const ModuleSum& X, const IndecSet& T);

// Whether some chain of n basis maps between indecomposables, each a
// T-coghost, ends in Y with nonzero composite.
bool has_coghost_chain(const Algebra& A, const IndecSet& T, Uniserial Y, int n);
// Same for T-ghosts starting at X.
bool has_ghost_chain(const Algebra& A, const IndecSet& T, Uniserial X, int n);

// Composites of n basis radical maps vanish (exhaustive for n <= 5), and
// `samples` random chains of radical matrices between sums vanish.
Report radical_nilpotence_check(const Algebra& A, int samples = 10000, std::uint64_t seed = 20240601);

// For every indecomposable Y and 1 <= n <= nmax: a nonzero n-fold T-coghost
// into Y exists iff Y is outside [Sub T]_n, and dually for ghosts and Fac T.
Report coghost_lemma_check(const Algebra& A, const IndecSet& T, int nmax);

}  // namespace orlov
