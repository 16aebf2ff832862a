#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "orlov/nakayama.hpp"
#include "orlov/report.hpp"

// Brute-force linear algebra over the two-element field.  Slow, but shares
// no code with the combinatorial rules it is used to check.
namespace orlov::f2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int size) : size_(size), w_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true) {
        if (v) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(int i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const;
    int lowest() const;  // -1 when zero
    bool operator==(const BitVec&) const = default;

private:
    int size_ = 0;
    boost::container::small_vector<std::uint64_t, 2> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}
    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return r_[r].get(c); }
    void set(int r, int c, bool v = true) { r_[r].set(c, v); }
    const BitVec& row(int r) const { return r_[r]; }
    BitVec& row(int r) { return r_[r]; }
    bool is_zero() const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
    bool operator==(const BitMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    boost::container::small_vector<BitVec, 6> r_;
};

// Row-reduce a list of equal-length vectors; returns the rank.
int rank(std::vector<BitVec> rows);
// Basis of {x : Mx = 0} where M is given by its rows over `cols` unknowns.
std::vector<BitVec> nullspace(std::vector<BitVec> rows, int cols);

// A representation of the bound quiver: one space per vertex and one matrix
// per arrow.  Arrow k (0-based) goes from vertex k+1 to the next vertex; the
// matrix has shape dims[target] x dims[source].
struct MatRep {
    std::vector<int> dims;
    std::vector<BitMatrix> arrows;
    int dimension() const;
};

// One morphism of representations, a matrix per vertex.
struct RepMap {
    std::vector<BitMatrix> at;
    bool is_zero() const;
};

class Oracle {
public:
    explicit Oracle(const Algebra& A);

    const Algebra& algebra() const { return A_; }
    int arrow_count() const;
    int arrow_source(int k) const { return k + 1; }
    int arrow_target(int k) const { return A_.step(k + 1, 1); }

    MatRep to_matrep(const ModuleSum& M) const;
    bool relation_holds(const MatRep& X) const;
    bool is_morphism(const MatRep& X, const MatRep& Y, const RepMap& f) const;

    int hom_space_dim(const MatRep& X, const MatRep& Y) const;
    int hom_space_dim(Uniserial X, Uniserial Y) const;
    // Surject-then-inject maps, one per way of matching a quotient window of X
    // with a submodule window of Y.
    std::vector<RepMap> window_maps(Uniserial X, Uniserial Y) const;
    static RepMap compose(const RepMap& g, const RepMap& f);

    // dim Ext^1(V, U) over the two-element field.
    int ext_dim(const ModuleSum& V, const ModuleSum& U) const;
    // Decomposed middle terms of 0 -> U -> E -> V -> 0, one per Ext class.
    std::set<ModuleSum> middle_terms(const ModuleSum& V, const ModuleSum& U, int cap = 12) const;

    // Linear shapes only.
    ModuleSum decompose(const MatRep& X) const;

private:
    struct Path {
        int start;
        int length;
    };
    struct ExtData;
    ExtData ext_data(const MatRep& U, const MatRep& V) const;
    BitMatrix path_matrix(const MatRep& X, int start, int from, int to) const;

    Algebra A_;
    std::vector<Path> relations_;
    std::vector<MatRep> indec_reps_;
    std::vector<std::vector<int>> gram_;  // gram_[I][J] = dim Hom(I, J)
};

// Every module with summand multiplicities <= max_mult and dimension <= cap.
std::vector<ModuleSum> modules_up_to(const Algebra& A, int cap, int max_mult);

// Cross-checks of the combinatorial rules against the oracle.
Report check_hom_dims(const Algebra& A);
Report check_ext_rule(const Algebra& A);
Report check_roundtrip(const Algebra& A, int cap);
// Summands of all middle terms with U in add(left), V in add(right) equal
// star(left, right), for every pair of subsets.
Report check_star_completeness(const Algebra& A, int cap, int max_mult);

}  // namespace orlov::f2
