#include "orlov/coghost.hpp"

#include <algorithm>
#include <random>

#include "orlov/extension_closure.hpp"

namespace orlov {

namespace {

// Component s -> t of a map into or out of a single indecomposable.
Morphism single(const ModuleSum& X, const ModuleSum& Y, std::size_t s, std::size_t t) {
    Morphism f = Morphism::zero(X, Y);
    f.coeff[s][t] = 1;
    return f;
}

int hom_to_set(const Algebra& A, const ModuleSum& M, Uniserial I) {
    int h = 0;
    for (auto& u : M.summands()) h += hom_dim(A, u, I);
    return h;
}

int hom_from_set(const Algebra& A, Uniserial I, const ModuleSum& M) {
    int h = 0;
    for (auto& u : M.summands()) h += hom_dim(A, I, u);
    return h;
}

// Builds a morphism whose other side is the sorted sum of `parts`, where
// parts[k] = (module, summand index on the fixed side).
template <bool Outgoing>
Morphism assemble(const ModuleSum& fixed, std::vector<std::pair<Uniserial, std::size_t>> parts) {
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Uniserial> mods;
    for (auto& p : parts) mods.push_back(p.first);
    ModuleSum other(mods);
    if constexpr (Outgoing) {
        Morphism f = Morphism::zero(fixed, other);
        for (std::size_t k = 0; k < parts.size(); ++k) f.coeff[parts[k].second][k] = 1;
        return f;
    } else {
        Morphism f = Morphism::zero(other, fixed);
        for (std::size_t k = 0; k < parts.size(); ++k) f.coeff[k][parts[k].second] = 1;
        return f;
    }
}

}  // namespace

bool is_coghost(const Algebra& A, const Morphism& f, const IndecSet& T) {
    const auto members = T.members(A);
    // Fast path: for each I, no maps leave the source or none leave the target.
    bool shortcut = true;
    for (auto& I : members)
        if (hom_to_set(A, f.source, I) != 0 && hom_to_set(A, f.target, I) != 0) shortcut = false;
    if (shortcut) return true;
    const auto& Y = f.target.summands();
    for (auto& I : members)
        for (std::size_t t = 0; t < Y.size(); ++t) {
            if (hom_dim(A, Y[t], I) == 0) continue;
            if (!compose(single(f.target, ModuleSum(I), t, 0), f).is_zero()) return false;
        }
    return true;
}

bool is_ghost(const Algebra& A, const Morphism& f, const IndecSet& T) {
    const auto members = T.members(A);
    bool shortcut = true;
    for (auto& I : members)
        if (hom_from_set(A, I, f.source) != 0 && hom_from_set(A, I, f.target) != 0) shortcut = false;
    if (shortcut) return true;
    const auto& X = f.source.summands();
    for (auto& I : members)
        for (std::size_t s = 0; s < X.size(); ++s) {
            if (hom_dim(A, I, X[s]) == 0) continue;
            if (!compose(f, single(ModuleSum(I), f.source, 0, s)).is_zero()) return false;
        }
    return true;
}

IndecSet tm_generator(const Algebra& A, int m) {
    if (!A.is_linear()) throw InputError("T_m needs a linear quiver");
    if (m < 1 || m >= A.n()) throw InputError("m must satisfy 1 <= m < n");
    std::vector<Uniserial> parts;
    for (int j = 1; j <= m; ++j) parts.push_back(interval(1, j));
    for (int i = 1; i <= A.n(); ++i) parts.push_back(A.simple(i));
    return IndecSet::of(A, parts);
}

std::vector<ArArrow> irreducible_coghosts(const Algebra& A, const IndecSet& T) {
    std::vector<ArArrow> out;
    for (auto& a : ar_quiver(A).arrows)
        if (is_coghost(A, Morphism::basis(A, a.source(), a.target()), T)) out.push_back(a);
    return out;
}

Morphism left_approximation(const Algebra& A, const ModuleSum& X, const IndecSet& T) {
    std::vector<std::pair<Uniserial, std::size_t>> parts;
    const auto& S = X.summands();
    for (std::size_t s = 0; s < S.size(); ++s)
        for (auto& I : T.members(A))
            if (hom_dim(A, S[s], I)) parts.emplace_back(I, s);
    return assemble<true>(X, parts);
}

Morphism right_approximation(const Algebra& A, const ModuleSum& X, const IndecSet& T) {
    std::vector<std::pair<Uniserial, std::size_t>> parts;
    const auto& S = X.summands();
    for (std::size_t s = 0; s < S.size(); ++s)
        for (auto& I : T.members(A))
            if (hom_dim(A, I, S[s])) parts.emplace_back(I, s);
    return assemble<false>(X, parts);
}

// The approximation is diagonal over the summands of X.  For u = M[a,b] the
// maps to members M[e,f] have kernels M[f+1,b], so the joint kernel is cut at
// the largest f; dually the images M[e,b] of maps into u add up to M[min e, b].
Morphism approximation_kernel(const Algebra& A, const ModuleSum& X, const IndecSet& T) {
    std::vector<std::pair<Uniserial, std::size_t>> parts;
    const auto& S = X.summands();
    for (std::size_t s = 0; s < S.size(); ++s) {
        int cut = S[s].top - 1;
        for (auto& I : T.members(A))
            if (hom_dim(A, S[s], I)) cut = std::max(cut, last(I));
        if (cut < last(S[s])) parts.emplace_back(interval(cut + 1, last(S[s])), s);
    }
    return assemble<false>(X, parts);
}

Morphism approximation_cokernel(const Algebra& A, const ModuleSum& X, const IndecSet& T) {
    std::vector<std::pair<Uniserial, std::size_t>> parts;
    const auto& S = X.summands();
    for (std::size_t s = 0; s < S.size(); ++s) {
        int cut = last(S[s]) + 1;
        for (auto& I : T.members(A))
            if (hom_dim(A, I, S[s])) cut = std::min(cut, I.top);
        if (cut > S[s].top) parts.emplace_back(interval(S[s].top, cut - 1), s);
    }
    return assemble<true>(X, parts);
}

namespace {

// ok[x][z]: the basis map ind[x] -> ind[z] exists and passes `test`.
template <class Test>
std::vector<std::vector<char>> basis_table(const Algebra& A, Test test) {
    const auto& ind = A.indecomposables();
    const std::size_t N = ind.size();
    std::vector<std::vector<char>> ok(N, std::vector<char>(N, 0));
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t z = 0; z < N; ++z)
            if (hom_dim(A, ind[x], ind[z])) ok[x][z] = test(Morphism::basis(A, ind[x], ind[z]));
    return ok;
}

// Chains of n allowed basis maps whose composite is nonzero.  A composite of
// canonical maps from M[a,b] stays nonzero exactly while a <= the end of every
// module passed through, so the state is (current module, a).
std::vector<std::vector<char>> chains(const Algebra& A, const std::vector<std::vector<char>>& ok,
                                      const std::vector<std::vector<char>>& start, int n) {
    const auto& ind = A.indecomposables();
    const std::size_t N = ind.size();
    auto reach = start;
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<char>> next(N, std::vector<char>(A.n() + 1, 0));
        for (std::size_t x = 0; x < N; ++x)
            for (int a = 1; a <= A.n(); ++a) {
                if (!reach[x][a]) continue;
                for (std::size_t z = 0; z < N; ++z)
                    if (ok[x][z] && a <= last(ind[z])) next[z][a] = 1;
            }
        reach = std::move(next);
    }
    return reach;
}

}  // namespace

bool has_coghost_chain(const Algebra& A, const IndecSet& T, Uniserial Y, int n) {
    const auto& ind = A.indecomposables();
    auto ok = basis_table(A, [&](const Morphism& f) { return is_coghost(A, f, T); });
    std::vector<std::vector<char>> start(ind.size(), std::vector<char>(A.n() + 1, 0));
    for (std::size_t x = 0; x < ind.size(); ++x) start[x][ind[x].top] = 1;
    auto reach = chains(A, ok, start, n);
    const int y = A.index_of(Y);
    return std::any_of(reach[y].begin(), reach[y].end(), [](char c) { return c != 0; });
}

bool has_ghost_chain(const Algebra& A, const IndecSet& T, Uniserial X, int n) {
    const auto& ind = A.indecomposables();
    auto ok = basis_table(A, [&](const Morphism& f) { return is_ghost(A, f, T); });
    std::vector<std::vector<char>> start(ind.size(), std::vector<char>(A.n() + 1, 0));
    start[A.index_of(X)][X.top] = 1;
    auto reach = chains(A, ok, start, n);
    for (auto& row : reach)
        if (std::any_of(row.begin(), row.end(), [](char c) { return c != 0; })) return true;
    return false;
}

Report radical_nilpotence_check(const Algebra& A, int samples, std::uint64_t seed) {
    if (!A.is_hereditary()) throw InputError("radical nilpotence check needs a linear hereditary algebra");
    Report rep{"radical nilpotence", 0, {}};
    const int n = A.n();
    const auto& ind = A.indecomposables();
    const std::size_t N = ind.size();

    if (n <= 5) {
        std::vector<std::size_t> path;
        auto dfs = [&](auto&& self, const Morphism& acc, std::size_t x, int depth) -> void {
            if (depth == n) {
                ++rep.checked;
                if (!acc.is_zero()) {
                    std::string p;
                    for (auto k : path) p += format(ind[k]) + " ";
                    rep.fail("nonzero composite along " + p + format(ind[x]));
                }
                return;
            }
            for (std::size_t z = 0; z < N; ++z) {
                if (z == x || !hom_dim(A, ind[x], ind[z])) continue;
                Morphism next = compose(Morphism::basis(A, ind[x], ind[z]), acc);
                path.push_back(x);
                self(self, next, z, depth + 1);
                path.pop_back();
            }
        };
        for (std::size_t x = 0; x < N; ++x) dfs(dfs, Morphism::identity(ModuleSum(ind[x])), x, 0);
    }

    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    auto random_sum = [&]() {
        std::vector<Uniserial> parts;
        const std::size_t k = 1 + pick(3);
        for (std::size_t i = 0; i < k; ++i) parts.push_back(ind[pick(N)]);
        return ModuleSum(parts);
    };
    for (int s = 0; s < samples; ++s) {
        ModuleSum X = random_sum();
        Morphism acc = Morphism::identity(X);
        for (int k = 0; k < n; ++k) {
            ModuleSum Y = random_sum();
            Morphism f = Morphism::zero(acc.target, Y);
            const auto& a = acc.target.summands();
            const auto& b = Y.summands();
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (!(a[i] == b[j]) && hom_dim(A, a[i], b[j]))
                        f.coeff[i][j] = static_cast<long long>(pick(7)) - 3;
            acc = compose(f, acc);
        }
        ++rep.checked;
        if (!acc.is_zero()) rep.fail("random chain of " + std::to_string(n) + " radical maps from " +
                                     format_module(X) + " does not vanish");
    }
    return rep;
}

Report coghost_lemma_check(const Algebra& A, const IndecSet& T, int nmax) {
    if (!A.is_hereditary()) throw InputError("coghost lemma check needs a linear hereditary algebra");
    Report rep{"coghost lemma", 0, {}};
    const ExtensionTable tab(A);
    const auto& ind = A.indecomposables();
    const std::size_t N = ind.size();
    const IndecSet sub = sub_closure(A, T), fac = fac_closure(A, T);
    const std::string tag = "T=" + format_module(T.as_module(A));

    auto cog_ok = basis_table(A, [&](const Morphism& f) { return is_coghost(A, f, T); });
    auto gh_ok = basis_table(A, [&](const Morphism& f) { return is_ghost(A, f, T); });
    std::vector<std::vector<char>> all_start(N, std::vector<char>(A.n() + 1, 0));
    for (std::size_t x = 0; x < N; ++x) all_start[x][ind[x].top] = 1;

    for (int n = 1; n <= nmax; ++n) {
        const IndecSet subn = tab.bracket(sub, n), facn = tab.bracket(fac, n);
        auto reach = chains(A, cog_ok, all_start, n);
        for (std::size_t y = 0; y < N; ++y) {
            ++rep.checked;
            const Uniserial Y = ind[y];
            const std::string where = tag + " n=" + std::to_string(n) + " Y=" + format(Y);
            const bool outside_sub = !subn.test(static_cast<int>(y));
            const bool chain = std::any_of(reach[y].begin(), reach[y].end(), [](char c) { return c != 0; });
            if (chain != outside_sub) rep.fail(where + ": coghost chain search disagrees with [Sub T]_n");

            ModuleSum K(Y);
            for (int k = 0; k < n; ++k) {
                Morphism eta = approximation_kernel(A, K, T);
                if (!is_coghost(A, eta, T)) rep.fail(where + ": approximation kernel is not a coghost");
                K = eta.source;
            }
            if (K.is_zero() == outside_sub) rep.fail(where + ": kernel chain disagrees with [Sub T]_n");

            std::vector<std::vector<char>> start(N, std::vector<char>(A.n() + 1, 0));
            start[y][Y.top] = 1;
            auto out = chains(A, gh_ok, start, n);
            bool gchain = false;
            for (auto& row : out) gchain |= std::any_of(row.begin(), row.end(), [](char c) { return c != 0; });
            const bool outside_fac = !facn.test(static_cast<int>(y));
            if (gchain != outside_fac) rep.fail(where + ": ghost chain search disagrees with [Fac T]_n");

            ModuleSum C(Y);
            for (int k = 0; k < n; ++k) {
                Morphism pi = approximation_cokernel(A, C, T);
                if (!is_ghost(A, pi, T)) rep.fail(where + ": approximation cokernel is not a ghost");
                C = pi.target;
            }
            if (C.is_zero() == outside_fac) rep.fail(where + ": cokernel chain disagrees with [Fac T]_n");
        }
    }
    return rep;
}

}  // namespace orlov
