#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "splift/archrep.hpp"

using namespace splift;

TEST_CASE("rho x rho root numbers match the table") {
    CHECK(root_number_rho_rho(12, 11) == -1);
    CHECK(root_number_rho_rho(11, 12) == -1);
    CHECK(root_number_rho_rho(3, 3) == 1);
    CHECK(root_number_rho_rho(4, 2) == 1);
    CHECK(root_number_rho_rho(11, 4) == 1);
    CHECK_THROWS_AS(root_number_rho_rho(0, 3), Error);
    CHECK_THROWS_AS(root_number_rho_rho(3, 0), Error);
}

TEST_CASE("rho x rho is symmetric and trivial on matching parity") {
    for (int a = 1; a <= 50; ++a) {
        for (int b = 1; b <= 50; ++b) {
            CHECK(root_number_rho_rho(a, b) == root_number_rho_rho(b, a));
            if ((a - b) % 2 == 0) CHECK(root_number_rho_rho(a, b) == 1);
        }
    }
}

TEST_CASE("rho x sgn root numbers") {
    CHECK(root_number_rho_sgn(11, 1) == FourthRootUnit(0));
    CHECK(root_number_rho_sgn(13, 0) == FourthRootUnit(2));
    CHECK(root_number_rho_sgn(2, 0) == FourthRootUnit(3));
    for (int a = 1; a <= 50; ++a)
        for (int delta : {0, 1}) CHECK(root_number_rho_sgn(a, delta).is_real() == (a % 2 == 1));
}

TEST_CASE("pairwise root numbers multiply over constituents") {
    // eps(rho_22 x rho_19) * eps(rho_19 x sgn) = (-1) * i^20 = -1
    CHECK(root_number_pair(ArchRep::rho(19),
                           ArchRep({ArchConstituent::rho(22), ArchConstituent::sign()})) ==
          FourthRootUnit(2));
    CHECK(root_number_pair(ArchRep::rho(11), ArchRep({ArchConstituent::trivial()})) ==
          FourthRootUnit(0));

    // doubling a constituent squares the value
    ArchRep single = ArchRep::rho(11);
    ArchRep doubled = single + single;
    ArchRep other({ArchConstituent::rho(22), ArchConstituent::sign()});
    FourthRootUnit u = root_number_pair(single, other);
    CHECK(root_number_pair(doubled, other) == u * u);

    CHECK_THROWS_AS(root_number_pair(ArchRep(), single), Error);
}

TEST_CASE("self-dual types") {
    CHECK(self_dual_type(ArchConstituent::rho(22)) == SelfDualType::orthogonal);
    CHECK(self_dual_type(ArchConstituent::rho(11)) == SelfDualType::symplectic);
    CHECK(self_dual_type(ArchConstituent::sign()) == SelfDualType::orthogonal);
    CHECK(self_dual_type(ArchConstituent::trivial()) == SelfDualType::orthogonal);
}

TEST_CASE("determinant at -1") {
    CHECK(det_at_minus_one(ArchRep({ArchConstituent::rho(22), ArchConstituent::sign()})) == 1);
    CHECK(det_at_minus_one(ArchRep::rho(11)) == 1);
    CHECK(det_at_minus_one(ArchRep::rho(22)) == -1);

    // det(A + A) = +1 for any A
    std::vector<ArchRep> samples = {
        ArchRep::rho(7),
        ArchRep({ArchConstituent::rho(4), ArchConstituent::sign()}),
        ArchRep({ArchConstituent::trivial(), ArchConstituent::sign(), ArchConstituent::rho(10)}),
    };
    for (const auto& a : samples) CHECK(det_at_minus_one(a + a) == 1);
}

TEST_CASE("restriction exponents (doubled)") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(exponents_of_factor(ArchConstituent::rho(19), 2)) ==
          std::vector<int>{-20, -18, 18, 20});
    CHECK(sorted(exponents_of_factor(ArchConstituent::rho(22), 1)) == std::vector<int>{-22, 22});
    CHECK(sorted(exponents_of_factor(ArchConstituent::sign(), 3)) == std::vector<int>{-2, 0, 2});

    // closed under negation for two-dimensional factors and odd-d quadratic factors
    for (int alpha = 1; alpha <= 10; ++alpha) {
        for (int d = 1; d <= 6; ++d) {
            auto e = sorted(exponents_of_factor(ArchConstituent::rho(alpha), d));
            auto n = e;
            for (auto& x : n) x = -x;
            CHECK(e == sorted(n));
        }
    }
    for (int d = 1; d <= 7; d += 2) {
        auto e = sorted(exponents_of_factor(ArchConstituent::trivial(), d));
        auto n = e;
        for (auto& x : n) x = -x;
        CHECK(e == sorted(n));
    }
}

TEST_CASE("rho_0 is not constructible") {
    CHECK_THROWS_AS(ArchConstituent::rho(0), Error);
    CHECK_THROWS_AS(ArchConstituent::rho(-3), Error);
}
