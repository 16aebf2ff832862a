#include <catch_amalgamated.hpp>

#include "orlov/nakayama.hpp"

using namespace orlov;

namespace {
Algebra lin(int n) { return Algebra::build({Shape::Linear, n, std::nullopt}); }
}  // namespace

TEST_CASE("kupisch series from descriptors") {
    CHECK(lin(4).kupisch() == std::vector<int>{4, 3, 2, 1});
    const Algebra cyc = Algebra::build({Shape::Cyclic, 4, Relation{1, 20}});
    CHECK(cyc.kupisch() == std::vector<int>{20, 23, 22, 21});
    CHECK(cyc.loewy_length() == 23);
    const Algebra ab = Algebra::build({Shape::Linear, 3, Relation{1, 2}});
    CHECK(ab.kupisch() == std::vector<int>{2, 2, 1});
}

TEST_CASE("kupisch entries match longest surviving paths") {
    // Walk every path from each vertex and stop at the first copy of the relation.
    for (int n = 1; n <= 6; ++n)
        for (int len = 2; len <= 2 * n + 3; ++len)
            for (int s = 1; s <= n; ++s) {
                const Algebra A = Algebra::build({Shape::Cyclic, n, Relation{s, len}});
                for (int i = 1; i <= n; ++i) {
                    int steps = 0;
                    // A path of k arrows from i contains the relation iff it passes s
                    // at some offset p with p + len <= k.
                    auto dead = [&](int k) {
                        for (int p = 0; p + len <= k; ++p)
                            if ((i - 1 + p) % n + 1 == s) return true;
                        return false;
                    };
                    while (!dead(steps + 1)) ++steps;
                    CHECK(A.c(i) == steps + 1);
                }
            }
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(Algebra::build({Shape::Cyclic, 3, Relation{1, 1}}), InputError);
    CHECK_THROWS_AS(Algebra::build({Shape::Cyclic, 3, std::nullopt}), InputError);
    CHECK_THROWS_AS(Algebra::build({Shape::Linear, 3, Relation{2, 2}}), InputError);
    CHECK_THROWS_AS(Algebra::build({Shape::Linear, 0, std::nullopt}), InputError);
    CHECK_THROWS_AS(Algebra::build({Shape::Linear, 3, Relation{4, 2}}), InputError);
    CHECK_NOTHROW(Algebra::build({Shape::Linear, 3, Relation{1, 2}}));
    CHECK_THROWS_AS(Algebra::from_kupisch(Shape::Linear, {3, 1, 1}), InputError);
    CHECK_THROWS_AS(Algebra::from_kupisch(Shape::Cyclic, {2, 4, 2}), InputError);
    CHECK_NOTHROW(Algebra::from_kupisch(Shape::Cyclic, {3, 2, 2}));
}

TEST_CASE("indecomposables") {
    CHECK(lin(4).num_indecomposables() == 10);
    CHECK(Algebra::build({Shape::Linear, 3, Relation{1, 2}}).num_indecomposables() == 5);
    CHECK(Algebra::build({Shape::Cyclic, 4, Relation{1, 20}}).num_indecomposables() == 86);
    const Algebra A = lin(3);
    int k = 0;
    for (auto& u : A.indecomposables()) CHECK(A.index_of(u) == k++);
    CHECK(A.index_of(Uniserial{3, 2}) == -1);
}

TEST_CASE("radical, socle, top") {
    const Algebra A = lin(4);
    CHECK(radical(A, ModuleSum(A.projective(1))) == ModuleSum(interval(2, 4)));
    CHECK(top(A, A.regular()) == ModuleSum{A.simple(1), A.simple(2), A.simple(3), A.simple(4)});
    CHECK(socle(A, ModuleSum{interval(1, 2), A.simple(1)}) == ModuleSum{A.simple(2), A.simple(1)});
    CHECK(radical(A, ModuleSum()).is_zero());
    CHECK(loewy_length(ModuleSum()) == 0);
    for (int n = 1; n <= 6; ++n) CHECK(loewy_length(lin(n).regular()) == n);
    // ll(rad M) = max(ll(M) - 1, 0)
    for (auto& u : A.indecomposables()) {
        const ModuleSum M{u, A.simple(2)};
        CHECK(loewy_length(radical(A, M)) == std::max(loewy_length(M) - 1, 0));
    }
}

TEST_CASE("projectives, injectives, simples") {
    const Algebra A = lin(4);
    CHECK(A.projective(1) == interval(1, 4));
    CHECK(A.injective(3) == interval(1, 3));
    const Algebra ab = Algebra::build({Shape::Linear, 3, Relation{1, 2}});
    CHECK(ab.projective(1) == interval(1, 2));
    CHECK(ab.injective(3) == interval(2, 3));
    const Algebra cyc = Algebra::build({Shape::Cyclic, 4, Relation{1, 20}});
    for (int j = 1; j <= 4; ++j) {
        const Uniserial I = cyc.injective(j);
        CHECK(cyc.socle_vertex(I) == j);
        CHECK(cyc.is_injective(I));
    }
}

TEST_CASE("SPI classification") {
    CHECK(spi_classify(lin(1)) == SpiClass::Semisimple);
    CHECK(spi_classify(lin(2)) == SpiClass::SPI);
    CHECK(spi_classify(lin(4)) == SpiClass::NotSPI);
    for (int n = 1; n <= 6; ++n)
        for (auto& d : linear_descriptors(n)) {
            const Algebra A = Algebra::build(d);
            if (spi_classify(A) == SpiClass::SPI) CHECK(A.loewy_length() <= 2);
            CHECK((spi_classify(A) == SpiClass::Semisimple) == (A.loewy_length() == 1));
        }
}

TEST_CASE("module literals") {
    CHECK(parse_module("1-4+2-2") == ModuleSum{Uniserial{1, 4}, Uniserial{2, 2}});
    CHECK(parse_module("0").is_zero());
    CHECK(format_module(ModuleSum{Uniserial{2, 2}, Uniserial{1, 4}}) == "1-4+2-2");
    CHECK(format_module(ModuleSum()) == "0");
    CHECK_THROWS_AS(parse_module("1-"), InputError);
    CHECK_THROWS_AS(parse_module("a-b"), InputError);
    CHECK_THROWS_AS(lin(3).check(parse_module("2-3")), InputError);
    CHECK(format_interval(interval(2, 4)) == "M[2,4]");
}
