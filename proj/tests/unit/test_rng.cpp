#include <cmath>
#include <vector>

#include "doctest.h"
#include "mjet/rng.hpp"

using namespace mjet;

TEST_CASE("derived streams are reproducible and distinct") {
    RngStream a(derive_seed(42, 7));
    RngStream b(derive_seed(42, 7));
    RngStream c(derive_seed(42, 8));
    bool all_equal = true, any_equal_c = false;
    for (int i = 0; i < 100; ++i) {
        auto va = a.next_u64(), vb = b.next_u64(), vc = c.next_u64();
        all_equal = all_equal && (va == vb);
        any_equal_c = any_equal_c || (va == vc);
    }
    CHECK(all_equal);
    CHECK_FALSE(any_equal_c);
}

TEST_CASE("normal draws have first two moments about right") {
    RngStream rng(derive_seed(1, 0));
    const int n = 200000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = rng.normal();
        s1 += z;
        s2 += z * z;
    }
    CHECK(std::abs(s1 / n) < 0.01);
    CHECK(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("blocked accumulator is invariant under thread count") {
    auto fn = [](std::size_t i, double* out) {
        RngStream rng(derive_seed(99, i));
        out[0] = rng.normal();
        out[1] = rng.uniform01();
    };
    auto s1 = BlockedAccumulator::sum(50000, 2, 1, fn);
    auto s4 = BlockedAccumulator::sum(50000, 2, 4, fn);
    auto s3 = BlockedAccumulator::sum(50000, 2, 3, fn);
    CHECK(s1[0] == s4[0]);
    CHECK(s1[1] == s4[1]);
    CHECK(s1[0] == s3[0]);
    CHECK(s1[1] == s3[1]);
}
