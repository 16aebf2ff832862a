#include "orlov/layers.hpp"

#include <algorithm>
#include <sstream>

namespace orlov {

std::set<int> TorsionSpec::complement(int n) const {
    std::set<int> out;
    for (int v = 1; v <= n; ++v)
        if (!contains(v)) out.insert(v);
    return out;
}

std::string TorsionSpec::to_string() const {
    std::string s = "{";
    for (int v : S) {
        if (s.size() > 1) s += ",";
        s += std::to_string(v);
    }
    return s + "}";
}

TorsionSpec parse_simples(const std::string& text) {
    TorsionSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw InputError("");
            spec.S.insert(v);
        } catch (const std::exception&) {
            throw InputError("bad vertex list: " + text);
        }
    }
    return spec;
}

std::optional<Uniserial> torsion_radical(const Algebra& A, const TorsionSpec& spec, Uniserial u) {
    A.check(u);
    for (int r = 0; r < u.length; ++r)
        if (!spec.contains(A.factor(u, r))) return Uniserial{A.factor(u, r), u.length - r};
    return std::nullopt;
}

ModuleSum torsion_radical(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M) {
    std::vector<Uniserial> out;
    for (auto& u : M.summands())
        if (auto t = torsion_radical(A, spec, u)) out.push_back(*t);
    return ModuleSum(out);
}

ModuleSum torsion_quotient(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M) {
    std::vector<Uniserial> out;
    for (auto& u : M.summands()) {
        auto t = torsion_radical(A, spec, u);
        const int r = t ? u.length - t->length : u.length;
        if (r > 0) out.push_back({u.top, r});
    }
    return ModuleSum(out);
}

int radical_layer_length(const Algebra& A, const TorsionSpec& spec, Uniserial u) {
    int i = 0;
    std::optional<Uniserial> cur = u;
    while (cur) {
        auto t = torsion_radical(A, spec, *cur);
        if (!t) break;
        ++i;
        cur = t->length > 1 ? std::optional<Uniserial>(Uniserial{A.step(t->top, 1), t->length - 1})
                            : std::nullopt;
    }
    return i;
}

int radical_layer_length(const Algebra& A, const TorsionSpec& spec, const ModuleSum& M) {
    int best = 0;
    for (auto& u : M.summands()) best = std::max(best, radical_layer_length(A, spec, u));
    return best;
}

int algebra_llts(const Algebra& A, const TorsionSpec& spec) {
    return radical_layer_length(A, spec, A.regular());
}

std::set<int> ceiling_spectrum(int L) {
    if (L < 1) throw InputError("layer length must be positive");
    std::set<int> out;
    for (int d = 1; d < L; ++d) out.insert((L + d - 1) / d - 1);
    return out;
}

IndecSet wd_generator(const Algebra& A, const TorsionSpec& spec, int d) {
    const int L = algebra_llts(A, spec);
    if (d < 1 || d >= L)
        throw InputError("d must satisfy 1 <= d < " + std::to_string(L));
    IndecSet out;
    const auto& ind = A.indecomposables();
    for (int k = 0; k < static_cast<int>(ind.size()); ++k)
        if (radical_layer_length(A, spec, ind[k]) <= d) out.set(k);
    return out;
}

std::optional<Uniserial> syzygy(const Algebra& A, Uniserial u) {
    A.check(u);
    const int c = A.c(u.top);
    if (u.length == c) return std::nullopt;
    return Uniserial{A.step(u.top, u.length), c - u.length};
}

std::optional<Uniserial> cosyzygy(const Algebra& A, Uniserial u) {
    A.check(u);
    const Uniserial I = A.injective(A.socle_vertex(u));
    if (I.length == u.length) return std::nullopt;
    return Uniserial{I.top, I.length - u.length};
}

namespace {

template <class Step>
HomDim orbit_length(Uniserial u, Step next) {
    std::set<Uniserial> seen;
    int k = 0;
    for (std::optional<Uniserial> cur = u; cur; cur = next(*cur), ++k)
        if (!seen.insert(*cur).second) return std::nullopt;
    return k - 1;
}

template <class F>
HomDim max_dim(const ModuleSum& M, F f) {
    int best = 0;
    for (auto& u : M.summands()) {
        HomDim d = f(u);
        if (!d) return std::nullopt;
        best = std::max(best, *d);
    }
    return best;
}

}  // namespace

HomDim projective_dimension(const Algebra& A, Uniserial u) {
    return orbit_length(u, [&](Uniserial x) { return syzygy(A, x); });
}

HomDim projective_dimension(const Algebra& A, const ModuleSum& M) {
    return max_dim(M, [&](Uniserial u) { return projective_dimension(A, u); });
}

HomDim injective_dimension(const Algebra& A, Uniserial u) {
    return orbit_length(u, [&](Uniserial x) { return cosyzygy(A, x); });
}

HomDim injective_dimension(const Algebra& A, const ModuleSum& M) {
    return max_dim(M, [&](Uniserial u) { return injective_dimension(A, u); });
}

HomDim global_dimension(const Algebra& A) {
    std::vector<Uniserial> simples;
    for (int i = 1; i <= A.n(); ++i) simples.push_back(A.simple(i));
    return projective_dimension(A, ModuleSum(simples));
}

TorsionSpec finite_pd_simples(const Algebra& A) {
    TorsionSpec spec;
    for (int i = 1; i <= A.n(); ++i)
        if (projective_dimension(A, A.simple(i))) spec.S.insert(i);
    return spec;
}

std::string format_dim(const HomDim& d) { return d ? std::to_string(*d) : "inf"; }

}  // namespace orlov
