#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neighborly/formulas.hpp"

using namespace neighborly;

TEST_CASE("height formula") {
    CHECK(height_formula(7) == 2);
    CHECK(height_formula(5) == 1);
    CHECK(height_formula(11) == 3);
    CHECK_THROWS_AS(height_formula(2), std::invalid_argument);
}

TEST_CASE("pd and reg case table") {
    CHECK(pdreg_formula(8) == PdReg{3, 5});
    CHECK(pdreg_formula(4) == PdReg{2, 2});
    CHECK(pdreg_formula(12) == PdReg{4, 8});
    CHECK(pdreg_formula(3) == PdReg{1, 2});
    CHECK(pdreg_formula(5) == PdReg{2, 3});
    CHECK(pdreg_formula(6) == PdReg{2, 4});
    CHECK(pdreg_formula(7) == PdReg{3, 4});
    CHECK_THROWS_AS(pdreg_formula(2), std::invalid_argument);
}

TEST_CASE("path ideal formula") {
    CHECK(pdpath_formula(3, 2) == PdReg{2, 1});
    CHECK(pdpath_formula(5, 5) == PdReg{1, 4});
    CHECK(pdpath_formula(13, 5) == PdReg{4, 8});
    CHECK_THROWS_AS(pdpath_formula(4, 5), std::invalid_argument);
}

TEST_CASE("first mapping cone case table") {
    CHECK(lemma_reg1_formula(7) == PdReg{2, 4});
    CHECK(lemma_reg1_formula(12) == PdReg{3, 6});
    CHECK(lemma_reg1_formula(10) == PdReg{3, 6});
    CHECK_THROWS_AS(lemma_reg1_formula(6), std::invalid_argument);
}

TEST_CASE("mapping cone recursion") {
    CHECK(mapping_cone_recursion(7) == PdReg{3, 4});
    CHECK(mapping_cone_recursion(10) == PdReg{4, 6});
    CHECK(mapping_cone_recursion(200) == pdreg_formula(200));
    for (int n = 7; n <= 500; ++n) CHECK(mapping_cone_recursion(n) == pdreg_formula(n));
    CHECK_THROWS_AS(mapping_cone_recursion(6), std::invalid_argument);
}

TEST_CASE("f and h closed forms") {
    FHFormula f7 = fh_formula(7);
    CHECK(f7.f == std::vector<long long>{1, 7, 14, 12, 5, 1});
    CHECK(f7.h == std::vector<long long>{1, 2, -4, 2, 0, 0});
    CHECK(f7.euler == 1);
    CHECK(f7.reduced_euler == 0);
    FHFormula f10 = fh_formula(10);
    CHECK(f10.f == std::vector<long long>{1, 10, 26, 30, 17, 4});
    CHECK(f10.top_faces == 4);
    long long hsum = 0;
    for (long long h : f10.h) hsum += h;
    CHECK(hsum == 4);
}

TEST_CASE("h is the binomial transform of f") {
    auto binom = [](long long m, long long k) {
        if (k < 0 || k > m) return 0LL;
        long long r = 1;
        for (long long j = 1; j <= k; ++j) r = r * (m - k + j) / j;
        return r;
    };
    for (int n = 7; n <= 500; ++n) {
        FHFormula fh = fh_formula(n);
        const long long d = 5;
        for (long long i = 0; i <= d; ++i) {
            long long hi = 0;
            for (long long j = 0; j <= i; ++j) {
                long long term = binom(d - j, i - j) * fh.f[static_cast<std::size_t>(j)];
                hi += ((i - j) % 2 == 0) ? term : -term;
            }
            CHECK(fh.h[static_cast<std::size_t>(i)] == hi);
        }
    }
}

TEST_CASE("cohen-macaulay characterization") {
    CHECK(cm_characterization(1));
    CHECK(cm_characterization(3));  // principal ideal, always Cohen-Macaulay
    CHECK(cm_characterization(6));
    CHECK(!cm_characterization(4));
    CHECK(!cm_characterization(5));
    CHECK(!cm_characterization(7));
    for (int n = 3; n <= 500; ++n) {
        bool equality = pdreg_formula(n).pd == height_formula(n);
        CHECK(pdreg_formula(n).pd >= height_formula(n));
        CHECK(equality == cm_characterization(n));
    }
}

TEST_CASE("big height formula") {
    CHECK(bight_formula(7) == 3);
    CHECK(bight_formula(12) == 4);
    CHECK(bight_formula(11) == 4);
    CHECK_THROWS_AS(bight_formula(6), std::invalid_argument);
}

TEST_CASE("invariant bundle consistency") {
    for (int n = 3; n <= 40; ++n) {
        InvariantBundle b = invariant_bundle(n);
        CHECK(b.depth == n - b.pd);
        CHECK(b.dim == n - b.height);
        CHECK(b.is_cm == (b.pd == b.height));
    }
}
