#include <catch_amalgamated.hpp>

#include "orlov/extension_closure.hpp"
#include "orlov/f2_oracle.hpp"
#include "orlov/homext.hpp"
#include "orlov/layers.hpp"

using namespace orlov;

namespace {
Algebra lin(int n) { return Algebra::build({Shape::Linear, n, std::nullopt}); }
Algebra ab() { return Algebra::build({Shape::Linear, 3, Relation{1, 2}}); }

IndecSet simples(const Algebra& A) {
    std::vector<Uniserial> s;
    for (int i = 1; i <= A.n(); ++i) s.push_back(A.simple(i));
    return IndecSet::of(A, s);
}
IndecSet of(const Algebra& A, std::vector<Uniserial> v) { return IndecSet::of(A, v); }
}  // namespace

TEST_CASE("extension levels of the simples over A_4") {
    const Algebra A = lin(4);
    const IndecSet S = simples(A);
    const IndecSet U2 = of(A, {A.simple(1), A.simple(2), A.simple(3), A.simple(4), interval(3, 4), interval(2, 3),
                               interval(1, 2)});
    CHECK(star(A, {.sub = S, .quot = S}) == U2);
    const IndecSet s12 = star(A, {.sub = S, .quot = U2});
    CHECK(s12 == (U2 | of(A, {interval(1, 3), interval(2, 4)})));
    CHECK_FALSE(s12.contains(A, A.projective(1)));
    CHECK(star(A, {.sub = U2, .quot = U2}) == IndecSet::all(A));
    CHECK(bracket_n(A, S, 4) == IndecSet::all(A));
    CHECK(bracket_n(A, S, 3).count() == 9);
    CHECK_FALSE(bracket_n(A, S, 3).contains(A, A.projective(1)));
    CHECK(bracket_n(A, S, 1) == S);
    CHECK(bracket_n(A, S, 0).empty());
    CHECK(generation_time(A, S) == 3);
    CHECK(generation_time(A, IndecSet::all(A)) == 0);
}

TEST_CASE("orientation of the product") {
    const Algebra A = lin(2);
    const IndecSet s1 = of(A, {A.simple(1)}), s2 = of(A, {A.simple(2)});
    // 0 -> S(2) -> P(1) -> S(1) -> 0
    CHECK(star(A, {.sub = s2, .quot = s1}).contains(A, A.projective(1)));
    CHECK_FALSE(star(A, {.sub = s1, .quot = s2}).contains(A, A.projective(1)));
}

TEST_CASE("associativity of the product") {
    for (int n : {3, 4}) {
        const ExtensionTable tab(lin(n));
        const std::uint32_t N = 1u << tab.size();
        // products of two subcategories, tabulated; every triple is then lookups
        std::vector<std::uint16_t> prod(std::size_t{N} * N);
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b) prod[std::size_t{a} * N + b] = tab.star64(a, b);
        std::uint64_t bad = 0;
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b) {
                const std::size_t ab = prod[std::size_t{a} * N + b];
                for (std::uint32_t c = 0; c < N; ++c)
                    bad += prod[ab * N + c] != prod[std::size_t{a} * N + prod[std::size_t{b} * N + c]];
            }
        INFO("n=" << n);
        CHECK(bad == 0);
    }
}

TEST_CASE("64-bit and generic products agree") {
    for (auto A : {lin(3), lin(4), lin(5), ab()}) {
        const ExtensionTable tab(A);
        const std::uint64_t N = std::uint64_t{1} << tab.size();
        for (std::uint64_t a = 0; a < N; a += 1 + N / 97)
            for (std::uint64_t b = 0; b < N; b += 1 + N / 89)
                CHECK(tab.star64(a, b) ==
                      tab.star({.sub = IndecSet::from_mask(a), .quot = IndecSet::from_mask(b)}).low_word());
    }
}

TEST_CASE("product agrees with the oracle on Linear(3)") {
    CHECK(f2::check_star_completeness(lin(3), 10, 2).ok());
    CHECK(f2::check_star_completeness(ab(), 10, 2).ok());
}

TEST_CASE("strong generators") {
    CHECK(is_strong_generator(lin(4), simples(lin(4))));
    const Algebra A = lin(3);
    // missing S(1) from socle and top
    CHECK_FALSE(is_strong_generator(A, of(A, {A.simple(2), A.simple(3)})));
    CHECK_FALSE(passes_generator_filter(A, of(A, {A.simple(2), A.simple(3)})));
    CHECK(is_strong_generator(ab(), simples(ab())));
    // the filter never rejects a strong generator
    const ExtensionTable tab(lin(4));
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << tab.size()); ++m)
        if (tab.generation_time64(m)) CHECK(passes_generator_filter(lin(4), IndecSet::from_mask(m)));
}

TEST_CASE("bounded length generators") {
    for (int n = 2; n <= 8; ++n) {
        const Algebra A = lin(n);
        for (int d = 1; d < n; ++d) {
            IndecSet T;
            for (auto& u : A.indecomposables())
                if (u.length <= d) T.set(A.index_of(u));
            CHECK(generation_time(A, T) == (n + d - 1) / d - 1);
        }
    }
}

TEST_CASE("spectra of small linear algebras") {
    CHECK(orlov_spectrum(lin(1)).spectrum == std::set<int>{0});
    CHECK(orlov_spectrum(lin(2)).spectrum == std::set<int>{0, 1});
    const auto r4 = orlov_spectrum(lin(4));
    CHECK(r4.spectrum == std::set<int>{0, 1, 2, 3});
    CHECK(r4.ext_dim() == 0);
    CHECK(r4.u_dim() == 3);
    for (auto& [t, T] : r4.witnesses) CHECK(generation_time(lin(4), T) == t);
    CHECK_THROWS_AS(orlov_spectrum(Algebra::build({Shape::Cyclic, 3, Relation{1, 3}})), InputError);
    CHECK_THROWS_AS(orlov_spectrum(lin(7)), RefusalError);
}

TEST_CASE("parallel and serial spectra agree") {
    for (auto A : {lin(3), lin(4), ab(), Algebra::from_kupisch(Shape::Linear, {3, 3, 2, 1})}) {
        const auto p = orlov_spectrum(A, {.jobs = 2});
        const auto s = orlov_spectrum_serial(A);
        CHECK(p.spectrum == s.spectrum);
        CHECK(p.strong == s.strong);
        CHECK(p.witnesses == s.witnesses);
        const auto np = orlov_spectrum(A, {.prune = false});
        CHECK(np.spectrum == p.spectrum);
        CHECK(np.strong == p.strong);
    }
}

TEST_CASE("subset lemmas") {
    CHECK(verify_subset_lemmas(lin(3)).ok());
    CHECK(verify_subset_lemmas(lin(4), {.exhaustive = false, .samples = 5000}).ok());
}

TEST_CASE("strong generators of Linear(3) with relation ab have pd equal to the global dimension") {
    const Algebra A = ab();
    const ExtensionTable tab(A);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << tab.size()); ++m)
        if (tab.generation_time64(m))
            CHECK(projective_dimension(A, IndecSet::from_mask(m).as_module(A)) == global_dimension(A));
}

TEST_CASE("dimensions do not grow along the levels") {
    for (auto A : {ab(), lin(4)}) {
        const ExtensionTable tab(A);
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << tab.size()); m += 3) {
            const IndecSet T = IndecSet::from_mask(m);
            const ModuleSum TM = T.as_module(A);
            const HomDim pdT = projective_dimension(A, TM), idT = injective_dimension(A, TM);
            for (auto& u : tab.bracket(T, 3).members(A)) {
                const HomDim pd = projective_dimension(A, u), id = injective_dimension(A, u);
                CHECK((pd && pdT && *pd <= *pdT));
                CHECK((id && idT && *id <= *idT));
            }
        }
    }
}
