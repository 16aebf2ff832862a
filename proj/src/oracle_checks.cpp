#include <algorithm>

#include "orlov/extension_closure.hpp"
#include "orlov/f2_oracle.hpp"
#include "orlov/homext.hpp"

namespace orlov::f2 {

std::vector<ModuleSum> modules_up_to(const Algebra& A, int cap, int max_mult) {
    const auto& ind = A.indecomposables();
    std::vector<ModuleSum> out;
    std::vector<Uniserial> cur;
    auto rec = [&](auto&& self, std::size_t i, int dim) -> void {
        if (i == ind.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int m = 0; m <= max_mult && dim + m * ind[i].length <= cap; ++m) {
            for (int k = 0; k < m; ++k) cur.push_back(ind[i]);
            self(self, i + 1, dim + m * ind[i].length);
            for (int k = 0; k < m; ++k) cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Report check_hom_dims(const Algebra& A) {
    Oracle o(A);
    Report rep{"hom dimensions", 0, {}};
    for (auto& x : A.indecomposables())
        for (auto& y : A.indecomposables()) {
            ++rep.checked;
            int fast = hom_dim(A, x, y), slow = o.hom_space_dim(x, y);
            if (fast != slow)
                rep.fail("Hom(" + format(x) + "," + format(y) + "): " + std::to_string(fast) + " vs oracle " +
                         std::to_string(slow));
            auto maps = o.window_maps(x, y);
            if (static_cast<int>(maps.size()) != slow) rep.fail("window maps miscounted for " + format(x));
            MatRep rx = o.to_matrep(ModuleSum(x)), ry = o.to_matrep(ModuleSum(y));
            for (auto& f : maps)
                if (!o.is_morphism(rx, ry, f)) rep.fail("window map is not a morphism: " + format(x));
        }
    return rep;
}

Report check_ext_rule(const Algebra& A) {
    Oracle o(A);
    Report rep{"ext rule", 0, {}};
    for (auto& v : A.indecomposables())
        for (auto& u : A.indecomposables()) {
            ++rep.checked;
            const std::string tag = "V=" + format(v) + " U=" + format(u);
            int e = o.ext_dim(ModuleSum(v), ModuleSum(u));
            if ((e > 0) != ext1_nonzero(A, v, u)) rep.fail(tag + ": ext dim " + std::to_string(e));
            if (e > 1) rep.fail(tag + ": ext space not thin");
            std::set<ModuleSum> expect{ModuleSum{u, v}};
            auto glued = extension_summands(A, v, u);
            if (!glued.empty()) expect.insert(ModuleSum(glued));
            if (o.middle_terms(ModuleSum(v), ModuleSum(u), 1 << 20) != expect)
                rep.fail(tag + ": middle terms differ");
        }
    return rep;
}

Report check_roundtrip(const Algebra& A, int cap) {
    Oracle o(A);
    Report rep{"decomposition round trip", 0, {}};
    for (auto& M : modules_up_to(A, cap, cap)) {
        ++rep.checked;
        MatRep X = o.to_matrep(M);
        if (!o.relation_holds(X)) rep.fail(format_module(M) + " violates the relations");
        if (o.decompose(X) != M) rep.fail(format_module(M) + " does not decompose to itself");
    }
    return rep;
}

Report check_star_completeness(const Algebra& A, int cap, int max_mult) {
    const ExtensionTable tab(A);
    const int N = tab.size();
    if (N > 12) throw RefusalError("completeness sweep is limited to 12 indecomposables");
    Oracle o(A);
    Report rep{"star completeness", 0, {}};
    const auto mods = modules_up_to(A, cap, max_mult);
    const std::size_t S = std::size_t{1} << N;
    std::vector<std::uint64_t> base(S * S, 0);
    auto support = [&](const ModuleSum& M) { return IndecSet::of(A, M).low_word(); };

    std::vector<std::uint64_t> supp(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) supp[i] = support(mods[i]);

    std::uint64_t pairs = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : pairs)
    for (std::int64_t iu = 0; iu < static_cast<std::int64_t>(mods.size()); ++iu) {
        const ModuleSum& U = mods[iu];
        std::vector<std::pair<std::size_t, std::uint64_t>> found;
        for (std::size_t iv = 0; iv < mods.size(); ++iv) {
            const ModuleSum& V = mods[iv];
            if (U.dimension() + V.dimension() > cap) continue;
            ++pairs;
            std::uint64_t g = 0;
            for (auto& E : o.middle_terms(V, U, cap)) g |= support(E);
            found.emplace_back(supp[iu] * S + supp[iv], g);
        }
#pragma omp critical
        for (auto& [k, g] : found) base[k] |= g;
    }
    rep.checked += pairs;

    // Union over all smaller supports on both sides.
    for (int b = 0; b < N; ++b)
        for (std::size_t l = 0; l < S; ++l) {
            if (!((l >> b) & 1u)) continue;
            for (std::size_t r = 0; r < S; ++r) base[l * S + r] |= base[(l ^ (std::size_t{1} << b)) * S + r];
        }
    for (int b = 0; b < N; ++b)
        for (std::size_t l = 0; l < S; ++l)
            for (std::size_t r = 0; r < S; ++r)
                if ((r >> b) & 1u) base[l * S + r] |= base[l * S + (r ^ (std::size_t{1} << b))];

    for (std::size_t l = 0; l < S; ++l)
        for (std::size_t r = 0; r < S; ++r) {
            ++rep.checked;
            const std::uint64_t fast = tab.star64(l, r);
            if (fast != base[l * S + r])
                rep.fail("sub " + format_module(IndecSet::from_mask(l).as_module(A)) + ", quot " +
                         format_module(IndecSet::from_mask(r).as_module(A)) + ": star " +
                         format_module(IndecSet::from_mask(fast).as_module(A)) + " vs oracle " +
                         format_module(IndecSet::from_mask(base[l * S + r]).as_module(A)));
        }
    return rep;
}

}  // namespace orlov::f2
