#include <catch_amalgamated.hpp>

#include "orlov/f2_oracle.hpp"
#include "orlov/homext.hpp"

using namespace orlov;
using namespace orlov::f2;

namespace {
Algebra lin(int n) { return Algebra::build({Shape::Linear, n, std::nullopt}); }
Algebra ab() { return Algebra::build({Shape::Linear, 3, Relation{1, 2}}); }
}  // namespace

TEST_CASE("GF(2) linear algebra") {
    BitVec a(3), b(3);
    a.set(0);
    a.set(1);
    b.set(1);
    CHECK(rank({a, b}) == 2);
    CHECK(rank({a, a}) == 1);
    const auto ns = nullspace({a, b}, 3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].get(2));
    BitMatrix I = BitMatrix::identity(3);
    CHECK(I * I == I);
    CHECK((I + I).is_zero());
}

TEST_CASE("hom spaces agree with the combinatorial rule") {
    for (int n = 1; n <= 4; ++n) CHECK(check_hom_dims(lin(n)).ok());
    CHECK(check_hom_dims(ab()).ok());
    for (auto len : {3, 5, 6}) CHECK(check_hom_dims(Algebra::build({Shape::Cyclic, 3, Relation{1, len}})).ok());
    const Oracle O(lin(4));
    CHECK(O.hom_space_dim(interval(2, 4), interval(1, 3)) == 1);
    CHECK(O.hom_space_dim(O.to_matrep(ModuleSum(interval(1, 2))), O.to_matrep(ModuleSum())) == 0);
}

TEST_CASE("cyclic hom spaces can exceed one") {
    const Algebra A = Algebra::build({Shape::Cyclic, 2, Relation{1, 5}});
    const Oracle O(A);
    CHECK(O.hom_space_dim(A.projective(1), A.projective(1)) == hom_dim(A, A.projective(1), A.projective(1)));
    CHECK(hom_dim(A, A.projective(1), A.projective(1)) >= 2);
}

TEST_CASE("ext rule and decomposition round trip") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(check_ext_rule(lin(n)).ok());
        CHECK(check_roundtrip(lin(n), 10).ok());
    }
    CHECK(check_ext_rule(ab()).ok());
    CHECK(check_roundtrip(ab(), 10).ok());
}

TEST_CASE("middle terms") {
    const Oracle O2(lin(2));
    CHECK(O2.middle_terms(ModuleSum(interval(1, 1)), ModuleSum(interval(2, 2))) ==
          std::set<ModuleSum>{ModuleSum{interval(1, 1), interval(2, 2)}, ModuleSum(interval(1, 2))});
    const Oracle O4(lin(4));
    const auto mids = O4.middle_terms(ModuleSum(interval(1, 2)), ModuleSum(interval(3, 4)));
    CHECK(mids.count(ModuleSum(interval(1, 4))) == 1);
    const Oracle O3(lin(3));
    CHECK(O3.middle_terms(ModuleSum(interval(1, 1)), ModuleSum(interval(3, 3))) ==
          std::set<ModuleSum>{ModuleSum{interval(1, 1), interval(3, 3)}});
    CHECK(O4.ext_dim(ModuleSum(interval(1, 2)), ModuleSum(interval(3, 4))) == 1);
    CHECK_THROWS_AS(O4.middle_terms(ModuleSum{interval(1, 4), interval(1, 4)},
                                    ModuleSum{interval(1, 4), interval(1, 4)}, 12),
                    RefusalError);
}

TEST_CASE("module enumeration") {
    const auto mods = modules_up_to(lin(2), 2, 2);
    // 0, S1, S2, P1, S1+S1, S1+S2, S2+S2
    CHECK(mods.size() == 7);
}
