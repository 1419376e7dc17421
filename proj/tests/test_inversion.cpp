#include <random>
#include <vector>

#include "doctest.h"
#include "ilifc/inversion.hpp"

using namespace ilifc;

namespace {

std::vector<Level> lv(std::initializer_list<int> xs) {
    std::vector<Level> out;
    for (int x : xs) out.push_back(static_cast<Level>(x));
    return out;
}

BitVector bits(std::string_view s) { return BitVector::from_string(s); }

BitVector random_bits(int k, std::mt19937_64& rng, const BitVector& current) {
    for (;;) {
        BitVector v(k);
        for (int i = 1; i <= k; ++i) v.set(i, rng() & 1);
        if (!(v == current)) return v;
    }
}

}  // namespace

TEST_CASE("mode choice: invert exactly when strictly cheaper") {
    BitVector zero16(16);
    SUBCASE("distance 9 of 16 inverts at total cost 8") {
        const auto dec = choose_mode(zero16, BitVector::from_mask(0x1FF, 16), false);
        CHECK(dec.invert);
        CHECK(dec.predicted_data_cost == 7);
        CHECK(dec.predicted_inversion_cost == 1);
    }
    SUBCASE("distance 8 of 16 keeps at cost 8") {
        const auto dec = choose_mode(zero16, BitVector::from_mask(0xFF, 16), false);
        CHECK_FALSE(dec.invert);
        CHECK(dec.predicted_data_cost == 8);
        CHECK(dec.predicted_inversion_cost == 0);
    }
    SUBCASE("odd k boundary distance keeps") {
        const auto dec = choose_mode(BitVector(5), BitVector::from_mask(0b111, 5), false);
        CHECK_FALSE(dec.invert);
        CHECK(dec.predicted_data_cost == 3);
    }
    SUBCASE("exhausted cells force keeping") {
        const auto dec = choose_mode(zero16, BitVector::ones(16), true);
        CHECK_FALSE(dec.invert);
        CHECK(dec.predicted_data_cost == 16);
    }
    SUBCASE("identical data is rejected") {
        CHECK_THROWS_AS(choose_mode(zero16, zero16, false), SameDataError);
    }
}

TEST_CASE("inversion cells fill lowest-index first") {
    auto cells = lv({0, 0});
    increment_inversion(cells, 3);
    CHECK(cells == lv({1, 0}));
    cells = lv({2, 1});
    increment_inversion(cells, 3);
    CHECK(cells == lv({2, 2}));
    CHECK_THROWS_AS(increment_inversion(cells, 3), ExhaustedError);
}

TEST_CASE("maximum-distance write moves only the mode") {
    IilifcCodec codec{CodeParams(640, 16, 4, 32)};
    const WriteOutcome out = codec.write(BitVector::ones(16), WriteStrategy::UsualOnly);
    CHECK(out.applied());
    CHECK(out.data_cell_changes == 0);
    CHECK(out.inversion_cell_changes == 1);
    CHECK(codec.storing_mode() == 1);
    CHECK(codec.data() == BitVector::ones(16));
    CHECK(codec.decode() == BitVector::ones(16));
}

TEST_CASE("exhausted cells force a full-cost keep-mode write") {
    IilifcCodec codec{CodeParams(6, 2, 2, 2)};
    codec.load_cells(lv({1, 1, 0, 0, 0, 0}));
    CHECK(codec.exhausted());
    CHECK(codec.storing_mode() == 0);
    const WriteOutcome out = codec.write(bits("11"), WriteStrategy::UsualOnly);
    CHECK(out.applied());
    CHECK(out.data_cell_changes == 2);
    CHECK(out.inversion_cell_changes == 0);
}

TEST_CASE("same data is rejected") {
    IilifcCodec codec{CodeParams(5, 2, 2, 1)};
    CHECK_THROWS_AS(codec.write(bits("00"), WriteStrategy::UsualOnly), SameDataError);
}

TEST_CASE("cells exhausted in inverted mode keep storing complements") {
    IilifcCodec codec{CodeParams(7, 2, 2, 3)};
    codec.load_cells(lv({1, 1, 1, 0, 0, 0, 0}));  // odd exhausted weight: mode 1 latched
    CHECK(codec.exhausted());
    CHECK(codec.storing_mode() == 1);
    CHECK(codec.data() == bits("11"));
    const WriteOutcome out = codec.write(bits("01"), WriteStrategy::UsualOnly);
    CHECK(out.applied());
    CHECK(out.data_cell_changes == 1);
    CHECK(out.inversion_cell_changes == 0);
    CHECK(codec.decode() == bits("01"));
}

TEST_CASE("inverted mode decodes the complement of the stored sequence") {
    IilifcCodec codec{CodeParams(5, 2, 3, 1)};
    codec.load_cells(lv({1, 1, 0, 0, 1}));  // mode 1, slices store (1,1)
    CHECK(codec.storing_mode() == 1);
    CHECK(codec.decode() == bits("00"));
    CHECK(codec.data() == bits("00"));
}

TEST_CASE("fresh block decodes to zeros; applied writes round-trip") {
    IilifcCodec codec{CodeParams(24, 4, 2, 4)};
    CHECK(codec.decode() == bits("0000"));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 6; ++i) {
        const BitVector next = random_bits(4, rng, codec.data());
        if (!codec.write(next, WriteStrategy::AllowUnusual).applied()) break;
        CHECK(codec.decode() == next);
        CHECK(codec.data() == next);
    }
}

TEST_CASE("unusual fallback succeeds where the minimal write cannot fit") {
    const CodeParams params(5, 2, 2, 1);
    std::vector<Level> levels = lv({0, 1, 0, 1, 1});  // bit 1 active, other slice full

    IilifcCodec usual{params};
    usual.load_cells(levels);
    CHECK(usual.data() == bits("10"));
    const WriteOutcome rejected = usual.write(bits("11"), WriteStrategy::UsualOnly);
    CHECK_FALSE(rejected.applied());
    CHECK(rejected.diagnostics.bits_without_slice == 1);
    CHECK(rejected.diagnostics.empty_slices == 0);
    CHECK_FALSE(rejected.diagnostics.exhausted);

    IilifcCodec fallback{params};
    fallback.load_cells(levels);
    const WriteOutcome applied = fallback.write(bits("11"), WriteStrategy::AllowUnusual);
    CHECK(applied.applied());
    CHECK(applied.unusual);
    CHECK(applied.data_cell_changes == 1);
    CHECK(applied.inversion_cell_changes == 1);
    CHECK(fallback.storing_mode() == 1);
    CHECK(fallback.decode() == bits("11"));
}

TEST_CASE("erasure diagnostics report slice coverage") {
    SUBCASE("fresh block") {
        IilifcCodec codec{CodeParams(640, 16, 4, 32)};
        const EraseDiagnostics d = codec.diagnostics();
        CHECK(d.bits_without_slice == 16);
        CHECK(d.empty_slices == 38);
        CHECK(d.unused_levels == 38LL * 16 * 3);
        CHECK_FALSE(d.exhausted);
    }
    SUBCASE("all slices full") {
        IilifcCodec codec{CodeParams(5, 2, 2, 1)};
        codec.load_cells(lv({0, 1, 1, 1, 1}));
        const EraseDiagnostics d = codec.diagnostics();
        CHECK(d.bits_without_slice == 2);
        CHECK(d.empty_slices == 0);
        CHECK(d.unused_levels == 0);
    }
    SUBCASE("one active slice") {
        IilifcCodec codec{CodeParams(5, 2, 2, 1)};
        codec.load_cells(lv({0, 1, 0, 0, 0}));
        CHECK(codec.diagnostics().bits_without_slice == 1);
    }
}

TEST_CASE("mode flag always matches data vs stored sequence") {
    std::mt19937_64 rng(11);
    IilifcCodec codec{CodeParams(21, 3, 3, 3)};
    for (int epoch = 0; epoch < 4; ++epoch) {
        for (;;) {
            const BitVector next = random_bits(3, rng, codec.data());
            if (!codec.write(next, WriteStrategy::AllowUnusual).applied()) break;
            BitVector stored = codec.data_codec().decode();
            if (codec.storing_mode() == 1) stored = stored.complemented();
            CHECK(stored == codec.data());
        }
        codec.erase();
    }
}

TEST_CASE("write costs stay within the per-strategy caps") {
    std::mt19937_64 rng(99);
    const CodeParams params(72, 4, 3, 8);
    for (WriteStrategy strategy : {WriteStrategy::UsualOnly, WriteStrategy::AllowUnusual}) {
        IilifcCodec codec{params};
        for (int epoch = 0; epoch < 20; ++epoch) {
            for (;;) {
                const bool was_exhausted = codec.exhausted();
                const BitVector next = random_bits(4, rng, codec.data());
                const WriteOutcome out = codec.write(next, strategy);
                if (!out.applied()) break;
                if (was_exhausted) continue;  // forced keep-mode may cost up to k
                if (out.unusual)
                    CHECK(out.data_cell_changes <= params.k - 1);
                else
                    CHECK(out.data_cell_changes <= params.usual_cost_cap);
            }
            codec.erase();
        }
    }
}

TEST_CASE("zero inversion cells behave exactly like the plain codec") {
    const CodeParams params(18, 4, 2, 0);
    IilifcCodec with_layer{params};
    IlifcCodec plain{params};
    CHECK(with_layer.exhausted());  // no cells to move: keep-mode from the start
    std::mt19937_64 rng(17);
    for (int step = 0; step < 200; ++step) {
        const BitVector next = random_bits(4, rng, with_layer.data());
        const WriteOutcome a = with_layer.write(next, WriteStrategy::UsualOnly);
        const WriteOutcome b = plain.write(next);
        CHECK(a.applied() == b.applied());
        CHECK(a.data_cell_changes == b.data_cell_changes);
        if (!a.applied()) {
            with_layer.erase();
            plain.erase();
            continue;
        }
        const auto cells = with_layer.all_cells();
        REQUIRE(cells.size() == plain.cells().size());
        CHECK(std::equal(cells.begin(), cells.end(), plain.cells().begin()));
    }
}
