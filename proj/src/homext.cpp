#include "orlov/homext.hpp"

#include <algorithm>
#include <sstream>

namespace orlov {

int hom_dim(const Algebra& A, Uniserial X, Uniserial Y) {
    A.check(X);
    A.check(Y);
    if (A.is_linear()) {
        const int a = X.top, b = last(X), c = Y.top, d = last(Y);
        return (c <= a && a <= d && d <= b) ? 1 : 0;
    }
    // Count the k for which the top k factors of X sit at the bottom of Y.
    int count = 0;
    for (int k = 1; k <= std::min(X.length, Y.length); ++k)
        if (A.factor(Y, Y.length - k) == X.top) ++count;
    return count;
}

bool ext1_nonzero(const Algebra& A, Uniserial V, Uniserial U) {
    if (!A.is_linear()) throw InputError("ext1_nonzero is only available for linear quivers");
    A.check(V);
    A.check(U);
    const int a = V.top, b = last(V), c = U.top, d = last(U);
    return a < c && c <= b + 1 && b + 1 <= d && d - a + 1 <= A.c(a);
}

std::vector<Uniserial> extension_summands(const Algebra& A, Uniserial V, Uniserial U) {
    if (!ext1_nonzero(A, V, U)) return {};
    std::vector<Uniserial> out{interval(V.top, last(U))};
    if (U.top <= last(V)) out.push_back(interval(U.top, last(V)));
    return out;
}

std::optional<Uniserial> staircase_summand(const Algebra& A, Uniserial V, Uniserial S1, Uniserial S2) {
    if (!ext1_nonzero(A, V, S1) || !ext1_nonzero(A, V, S2)) return std::nullopt;
    if (S1.top < S2.top && last(S1) > last(S2)) return interval(S1.top, last(S2));
    return std::nullopt;
}

std::string ArArrow::label() const {
    return std::string(kind == Kind::Plus ? "f+" : "f-") + "[" + std::to_string(i) + "," +
           std::to_string(j) + "]";
}

ArQuiver ar_quiver(const Algebra& A) {
    if (!A.is_hereditary()) throw InputError("AR quiver export needs a linear hereditary algebra");
    ArQuiver q;
    const int n = A.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) q.nodes.push_back(interval(i, j));
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) q.arrows.push_back(f_plus(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) q.arrows.push_back(f_minus(i, j));
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

std::string ArQuiver::to_dot() const {
    std::ostringstream os;
    os << "digraph AR {\n";
    for (auto& u : nodes) os << "  \"" << format_interval(u) << "\";\n";
    for (auto& a : arrows)
        os << "  \"" << format_interval(a.source()) << "\" -> \"" << format_interval(a.target())
           << "\" [label=\"" << a.label() << "\"];\n";
    os << "}\n";
    return os.str();
}

IndecSet sub_closure(const Algebra& A, const IndecSet& T) {
    IndecSet out;
    for (auto& u : T.members(A))
        for (int r = 0; r < u.length; ++r) out.set(A.index_of({A.step(u.top, r), u.length - r}));
    return out;
}

IndecSet fac_closure(const Algebra& A, const IndecSet& T) {
    IndecSet out;
    for (auto& u : T.members(A))
        for (int l = 1; l <= u.length; ++l) out.set(A.index_of({u.top, l}));
    return out;
}

}  // namespace orlov
