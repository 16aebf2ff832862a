#include "orlov/indec_set.hpp"

namespace orlov {

void check_size(const Algebra& A) {
    if (A.num_indecomposables() > kMaxIndecomposables)
        throw RefusalError("algebra has more than " + std::to_string(kMaxIndecomposables) +
                           " indecomposables");
}

IndecSet IndecSet::of(const Algebra& A, const std::vector<Uniserial>& members) {
    check_size(A);
    IndecSet s;
    for (auto& u : members) {
        A.check(u);
        s.set(A.index_of(u));
    }
    return s;
}

IndecSet IndecSet::of(const Algebra& A, const ModuleSum& M) { return of(A, M.summands()); }

IndecSet IndecSet::all(const Algebra& A) {
    check_size(A);
    IndecSet s;
    for (int i = 0; i < A.num_indecomposables(); ++i) s.set(i);
    return s;
}

bool IndecSet::contains(const Algebra& A, Uniserial u) const {
    int i = A.index_of(u);
    return i >= 0 && test(i);
}

std::uint64_t IndecSet::low_word() const {
    return (bits_ & Bits(~std::uint64_t{0})).to_ullong();
}

std::vector<int> IndecSet::indices() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxIndecomposables; ++i)
        if (bits_.test(i)) out.push_back(i);
    return out;
}

std::vector<Uniserial> IndecSet::members(const Algebra& A) const {
    std::vector<Uniserial> out;
    for (int i : indices()) out.push_back(A.indecomposables().at(i));
    return out;
}

ModuleSum IndecSet::as_module(const Algebra& A) const { return ModuleSum(members(A)); }

}  // namespace orlov
