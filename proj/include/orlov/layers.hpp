#pragma once

#include <optional>
#include <set>
#include <string>

#include "orlov/indec_set.hpp"
#include "orlov/nakayama.hpp"

namespace orlov {

// A set S of simple modules, given by vertices.  The torsion class consists of
// the modules whose top avoids S; the torsion-free class of the modules with
// every composition factor in S.
struct TorsionSpec {
    std::set<int> S;

    bool contains(int v) const { return S.count(v) > 0; }
    // Complement in {1..n}.
    std::set<int> complement(int n) const;
    std::string to_string() const;  // "{1,3}"
};

TorsionSpec parse_simples(const std::string& text);  // "1,3", "" is the empty set

std::optional<Uniserial> torsion_radical(const Algebra& A, const TorsionSpec& spec, Uniserial u);
ModuleSum torsion_radical(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M);
ModuleSum torsion_quotient(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M);

// Least i with t(F^i M) = 0, where F = rad o t.
int radical_layer_length(const Algebra& A, const TorsionSpec& spec, Uniserial u);
int radical_layer_length(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M);
// Maximum over the indecomposable projectives.
int algebra_llts(const Algebra& A, const TorsionSpec& spec);

// { ceil(L/d) - 1 : 1 <= d < L }.
std::set<int> ceiling_spectrum(int L);

// Indecomposables Z with layer length at most d; requires 1 <= d < algebra_llts.
IndecSet wd_generator(const Algebra& A, const TorsionSpec& spec, int d);

// nullopt stands for infinite dimension.
using HomDim = std::optional<int>;

std::optional<Uniserial> syzygy(const Algebra& A, Uniserial u);    // nullopt when projective
std::optional<Uniserial> cosyzygy(const Algebra& A, Uniserial u);  // nullopt when injective
HomDim projective_dimension(const Algebra& A, Uniserial u);
HomDim projective_dimension(const Algebra& A, const ModuleSum& M);
HomDim injective_dimension(const Algebra& A, Uniserial u);
HomDim injective_dimension(const Algebra& A, const ModuleSum& M);
HomDim global_dimension(const Algebra& A);

// Vertices whose simple module has finite projective dimension.
TorsionSpec finite_pd_simples(const Algebra& A);

std::string format_dim(const HomDim& d);  // "inf" for nullopt

}  // namespace orlov
