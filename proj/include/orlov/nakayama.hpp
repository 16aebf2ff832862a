#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlov {

// Bad descriptors, out-of-range vertices, malformed literals.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation refused because of size limits.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Shape { Linear, Cyclic };

struct Relation {
    int start = 1;
    int length = 2;
    bool operator==(const Relation&) const = default;
};

struct AlgebraDescriptor {
    Shape shape = Shape::Linear;
    int n = 1;
    std::optional<Relation> relation;
    bool operator==(const AlgebraDescriptor&) const = default;
};

// Indecomposable module with top S(top) and the given composition length.
struct Uniserial {
    int top = 1;
    int length = 1;
    auto operator<=>(const Uniserial&) const = default;
};

// Finite direct sum of uniserials, kept sorted.
class ModuleSum {
public:
    ModuleSum() = default;
    ModuleSum(std::vector<Uniserial> parts);
    ModuleSum(std::initializer_list<Uniserial> parts);
    explicit ModuleSum(Uniserial u) : parts_{u} {}

    const std::vector<Uniserial>& summands() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    int dimension() const;

    ModuleSum& operator+=(const ModuleSum& other);
    friend ModuleSum operator+(ModuleSum a, const ModuleSum& b) { return a += b; }
    auto operator<=>(const ModuleSum&) const = default;

private:
    std::vector<Uniserial> parts_;
};

enum class SpiClass { Semisimple, SPI, NotSPI };

class Algebra {
public:
    static Algebra build(const AlgebraDescriptor& d);
    // Debug entry point: raw Kupisch series, checked against the Kupisch condition.
    static Algebra from_kupisch(Shape shape, std::vector<int> kupisch);

    Shape shape() const { return shape_; }
    bool is_linear() const { return shape_ == Shape::Linear; }
    bool is_hereditary() const;
    int n() const { return static_cast<int>(kupisch_.size()); }
    const std::vector<int>& kupisch() const { return kupisch_; }
    int c(int vertex) const { return kupisch_.at(vertex - 1); }
    const std::optional<AlgebraDescriptor>& descriptor() const { return descriptor_; }
    int dimension() const;
    int loewy_length() const;

    // Vertex reached after `steps` arrows from v (wraps for the cyclic quiver).
    int step(int v, int steps) const;
    void check_vertex(int v) const;
    bool contains(Uniserial u) const;
    void check(Uniserial u) const;
    void check(const ModuleSum& m) const;

    int socle_vertex(Uniserial u) const { return step(u.top, u.length - 1); }
    // Vertex of the k-th composition factor counted from the top (k = 0 is the top).
    int factor(Uniserial u, int k) const { return step(u.top, k); }

    const std::vector<Uniserial>& indecomposables() const { return indecs_; }
    int num_indecomposables() const { return static_cast<int>(indecs_.size()); }
    // Position in indecomposables(), -1 if u is not a module over this algebra.
    int index_of(Uniserial u) const;

    Uniserial simple(int i) const;
    Uniserial projective(int i) const;
    Uniserial injective(int i) const;
    ModuleSum regular() const;

    bool is_projective(Uniserial u) const { return u.length == c(u.top); }
    bool is_injective(Uniserial u) const;

    bool operator==(const Algebra& o) const { return shape_ == o.shape_ && kupisch_ == o.kupisch_; }

private:
    Algebra(Shape s, std::vector<int> k, std::optional<AlgebraDescriptor> d);

    Shape shape_;
    std::vector<int> kupisch_;
    std::optional<AlgebraDescriptor> descriptor_;
    std::vector<Uniserial> indecs_;
    std::vector<int> offset_;  // offset_[i-1] = index of (i,1)
};

void validate(const AlgebraDescriptor& d);
std::vector<int> kupisch_series(const AlgebraDescriptor& d);

ModuleSum radical(const Algebra& A, const ModuleSum& M);
ModuleSum socle(const Algebra& A, const ModuleSum& M);
ModuleSum top(const Algebra& A, const ModuleSum& M);
int loewy_length(const ModuleSum& M);

SpiClass spi_classify(const Algebra& A);
const char* to_string(SpiClass c);

// Interval notation for linear shapes: M[i,j] = (i, j-i+1).
inline Uniserial interval(int i, int j) { return {i, j - i + 1}; }
inline int last(Uniserial u) { return u.top + u.length - 1; }

// "1-4+2-2" <-> M(1,4)+M(2,2); "0" is the zero module.
ModuleSum parse_module(const std::string& text);
std::string format_module(const ModuleSum& M);
std::string format(Uniserial u);
std::string format_interval(Uniserial u);  // "M[i,j]"

// Every linear descriptor with n vertices (hereditary and each single-path relation).
std::vector<AlgebraDescriptor> linear_descriptors(int n);
// Every cyclic descriptor with n vertices and relation length up to max_len.
std::vector<AlgebraDescriptor> cyclic_descriptors(int n, int max_len);

}  // namespace orlov
