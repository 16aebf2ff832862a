#include "orlov/morphisms.hpp"

#include "orlov/homext.hpp"

namespace orlov {

Morphism Morphism::make(const Algebra& A, ModuleSum source, ModuleSum target,
                        std::vector<std::vector<Scalar>> coeff) {
    if (!A.is_linear()) throw InputError("morphisms are only available for linear quivers");
    A.check(source);
    A.check(target);
    const auto& X = source.summands();
    const auto& Y = target.summands();
    if (coeff.size() != X.size()) throw InputError("coefficient matrix has the wrong number of rows");
    for (std::size_t s = 0; s < X.size(); ++s) {
        if (coeff[s].size() != Y.size()) throw InputError("coefficient matrix has the wrong number of columns");
        for (std::size_t t = 0; t < Y.size(); ++t)
            if (coeff[s][t].numerator() != 0 && hom_dim(A, X[s], Y[t]) == 0)
                throw InputError("nonzero coefficient where Hom(" + format(X[s]) + "," + format(Y[t]) + ") = 0");
    }
    return {std::move(source), std::move(target), std::move(coeff)};
}

Morphism Morphism::zero(ModuleSum source, ModuleSum target) {
    std::vector<std::vector<Scalar>> c(source.size(), std::vector<Scalar>(target.size(), 0));
    return {std::move(source), std::move(target), std::move(c)};
}

Morphism Morphism::identity(const ModuleSum& M) {
    Morphism f = zero(M, M);
    for (std::size_t s = 0; s < M.size(); ++s) f.coeff[s][s] = 1;
    return f;
}

Morphism Morphism::basis(const Algebra& A, Uniserial X, Uniserial Y) {
    if (hom_dim(A, X, Y) == 0) throw InputError("Hom(" + format(X) + "," + format(Y) + ") = 0");
    return make(A, ModuleSum(X), ModuleSum(Y), {{Scalar(1)}});
}

bool Morphism::is_zero() const {
    for (auto& row : coeff)
        for (auto& x : row)
            if (x.numerator() != 0) return false;
    return true;
}

bool basis_composite_nonzero(Uniserial X, Uniserial /*Y*/, Uniserial Z) { return X.top <= last(Z); }

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw InputError("morphisms are not composable");
    const auto& X = f.source.summands();
    const auto& Y = f.target.summands();
    const auto& Z = g.target.summands();
    Morphism h = Morphism::zero(f.source, g.target);
    for (std::size_t s = 0; s < X.size(); ++s)
        for (std::size_t t = 0; t < Y.size(); ++t) {
            if (f.coeff[s][t].numerator() == 0) continue;
            for (std::size_t u = 0; u < Z.size(); ++u)
                if (g.coeff[t][u].numerator() != 0 && basis_composite_nonzero(X[s], Y[t], Z[u]))
                    h.coeff[s][u] += f.coeff[s][t] * g.coeff[t][u];
        }
    return h;
}

bool is_radical_morphism(const Morphism& f) {
    const auto& X = f.source.summands();
    const auto& Y = f.target.summands();
    for (std::size_t s = 0; s < X.size(); ++s)
        for (std::size_t t = 0; t < Y.size(); ++t)
            if (X[s] == Y[t] && f.coeff[s][t].numerator() != 0) return false;
    return true;
}

}  // namespace orlov
