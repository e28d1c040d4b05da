#include <doctest.h>

#include <set>

#include "coverbot/rng.hpp"

using namespace coverbot;

TEST_CASE("splitmix64 matches the reference stream") {
    // First outputs for state 0, from the reference implementation.
    SplitMix64 sm(0);
    CHECK(sm.next() == 0xE220A8397B1DCDAFULL);
    CHECK(sm.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(sm.next() == 0x06C45D188009454FULL);
}

TEST_CASE("rng streams are deterministic per seed") {
    Rng a(42), b(42), c(43);
    bool all_equal = true;
    bool any_diff_from_c = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        all_equal = all_equal && va == b.next_u64();
        any_diff_from_c = any_diff_from_c || va != c.next_u64();
    }
    CHECK(all_equal);
    CHECK(any_diff_from_c);
}

TEST_CASE("uniform01 stays in [0,1) and below(n) in range") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.below(17) < 17);
    }
}

TEST_CASE("derive_seed separates streams and indices") {
    std::set<std::uint64_t> seen;
    for (auto stream : {SeedStream::TrainLayout, SeedStream::TrainAgent,
                        SeedStream::EvalLayout, SeedStream::EvalAgent}) {
        for (std::uint64_t i = 0; i < 500; ++i) seen.insert(derive_seed(9, stream, i));
    }
    CHECK(seen.size() == 4 * 500);  // mix64 is a bijection, inputs are distinct
    CHECK(derive_seed(9, SeedStream::TrainLayout, 0) ==
          derive_seed(9, SeedStream::TrainLayout, 0));
}
