#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "orlov/nakayama.hpp"

namespace orlov {

inline constexpr int kMaxIndecomposables = 128;

// A set of indecomposables, as bits over A.indecomposables().  Stands for the
// additive subcategory they generate.
class IndecSet {
public:
    using Bits = std::bitset<kMaxIndecomposables>;

    IndecSet() = default;
    explicit IndecSet(Bits b) : bits_(b) {}
    static IndecSet of(const Algebra& A, const std::vector<Uniserial>& members);
    static IndecSet of(const Algebra& A, const ModuleSum& M);
    static IndecSet all(const Algebra& A);
    static IndecSet from_mask(std::uint64_t mask) { return IndecSet(Bits(mask)); }

    bool test(int i) const { return bits_.test(i); }
    void set(int i) { bits_.set(i); }
    void reset(int i) { bits_.reset(i); }
    bool contains(const Algebra& A, Uniserial u) const;
    int count() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }
    bool subset_of(const IndecSet& o) const { return (bits_ & ~o.bits_).none(); }
    const Bits& bits() const { return bits_; }
    std::uint64_t low_word() const;  // bits 0..63

    std::vector<int> indices() const;
    std::vector<Uniserial> members(const Algebra& A) const;
    ModuleSum as_module(const Algebra& A) const;

    IndecSet& operator|=(const IndecSet& o) { bits_ |= o.bits_; return *this; }
    IndecSet& operator&=(const IndecSet& o) { bits_ &= o.bits_; return *this; }
    friend IndecSet operator|(IndecSet a, const IndecSet& b) { return a |= b; }
    friend IndecSet operator&(IndecSet a, const IndecSet& b) { return a &= b; }
    bool operator==(const IndecSet&) const = default;

private:
    Bits bits_;
};

void check_size(const Algebra& A);

}  // namespace orlov
