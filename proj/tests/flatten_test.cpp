#include "multirank/flatten.hpp"

#include <functional>

#include <gtest/gtest.h>

#include "multirank/error.hpp"
#include "support/generators.hpp"

using namespace multirank;

namespace {

MatrixPosition at(std::uint64_t r, std::uint64_t c) { return {r, c}; }

const char* kW = "dims 2 2 2 ; 1 |001> ; 1 |010> ; 1 |100>";
const char* kCluster = "dims 2 2 2 2 ; 1 |0000> ; 1 |0011> ; 1 |1100> ; -1 |1111>";

// Calls fn on every dims vector with entries in {2, 3, 4} and product <= limit.
// With `sorted`, only nondecreasing vectors are visited.
void for_each_dims(std::uint64_t limit, bool sorted, const std::function<void(const QuditDims&)>& fn) {
    std::vector<std::uint32_t> d;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t product) {
        if (d.size() >= 2) fn(QuditDims(d));
        for (std::uint32_t x = sorted && !d.empty() ? d.back() : 2; x <= 4; ++x) {
            if (product * x > limit) break;
            d.push_back(x);
            rec(product * x);
            d.pop_back();
        }
    };
    rec(1);
}

}  // namespace

TEST(RowColOf, Examples) {
    const QuditDims dims({2, 2, 2});
    EXPECT_EQ(row_col_of({0, 1, 0}, Bipartition(dims, {1}), dims), at(0, 2));
    EXPECT_EQ(row_col_of({1, 0, 1}, Bipartition(dims, {2}), dims), at(0, 3));
    const QuditDims mixed({3, 2, 4, 5});
    for (const auto& level : all_levels(mixed))
        for (const auto& b : level) EXPECT_EQ(row_col_of({0, 0, 0, 0}, b, mixed), at(0, 0));
}

TEST(RowColOf, MixedRadixWithFirstPartyMostSignificant) {
    const QuditDims dims({3, 2, 4, 5});
    // I = {1, 3}: row = i1 * 4 + i3; complement {2, 4}: col = i2 * 5 + i4
    EXPECT_EQ(row_col_of({2, 1, 3, 4}, Bipartition(dims, {1, 3}), dims), at(2 * 4 + 3, 1 * 5 + 4));
}

TEST(RowColOf, BijectiveOnCuboidsUpTo4096) {
    std::size_t systems = 0;
    std::size_t failures = 0;
    // Every ordering up to 1024 entries; beyond that one ordering per multiset
    // keeps the sweep to a few seconds.
    auto check = [&](const QuditDims& dims) {
        ++systems;
        for (const auto& level : all_levels(dims)) {
            for (const auto& b : level) {
                std::vector<bool> seen(dims.total(), false);
                std::size_t hits = 0;
                MultiIndex idx(dims.parties(), 0);
                while (true) {
                    const auto [row, col] = row_col_of(idx, b, dims);
                    if (row < b.row_dim() && col < b.col_dim() && !seen[row * b.col_dim() + col]) {
                        seen[row * b.col_dim() + col] = true;
                        ++hits;
                    }
                    std::size_t j = dims.parties();
                    while (j > 0 && ++idx[j - 1] == dims[j - 1]) idx[--j] = 0;
                    if (j == 0) break;
                }
                if (hits != dims.total()) ++failures;
            }
        }
    };
    for_each_dims(1024, false, check);
    for_each_dims(4096, true, [&](const QuditDims& dims) {
        if (dims.total() > 1024) check(dims);
    });
    EXPECT_EQ(failures, 0u);
    EXPECT_GT(systems, 100u);
}

TEST(Flatten, WStateFirstParty) {
    const FlattenedMatrix f = flatten(parse_state(kW), Bipartition(QuditDims({2, 2, 2}), {1}));
    EXPECT_EQ(f.matrix.rows(), 2u);
    EXPECT_EQ(f.matrix.cols(), 4u);
    const std::map<MatrixPosition, Amplitude> expected{{at(0, 1), 1}, {at(0, 2), 1}, {at(1, 0), 1}};
    EXPECT_EQ(f.matrix.entries(), expected);
}

TEST(Flatten, SingleTerm) {
    const FlattenedMatrix f = flatten(parse_state("dims 2 2 ; 1 |11>"), Bipartition(QuditDims({2, 2}), {1}));
    const std::map<MatrixPosition, Amplitude> expected{{at(1, 1), 1}};
    EXPECT_EQ(f.matrix.entries(), expected);
}

TEST(Flatten, FourQubitFirstPair) {
    const FlattenedMatrix f = flatten(parse_state(kCluster), Bipartition(QuditDims({2, 2, 2, 2}), {1, 2}));
    EXPECT_EQ(f.matrix.rows(), 4u);
    EXPECT_EQ(f.matrix.cols(), 4u);
    const std::map<MatrixPosition, Amplitude> expected{{at(0, 0), 1}, {at(0, 3), 1}, {at(3, 0), 1}, {at(3, 3), -1}};
    EXPECT_EQ(f.matrix.entries(), expected);
}

TEST(Flatten, RejectsForeignBipartition) {
    const StateTensor s = parse_state("dims 2 3 ; 1 |00>");
    EXPECT_THROW(flatten(s, Bipartition(QuditDims({3, 2}), {1})), DomainError);
    EXPECT_THROW(flatten(s, Bipartition(QuditDims({2, 3, 2}), {1})), DomainError);
}

TEST(Flatten, AgreesWithDenseReferenceAndConservesEntries) {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const QuditDims dims = testutil::random_dims(rng, 6, 3);
        const StateTensor s = testutil::random_state(rng, dims, 20);
        for (const auto& level : all_levels(dims)) {
            for (const auto& b : level) {
                const FlattenedMatrix f = flatten(s, b);
                ASSERT_EQ(f.matrix.entries().size(), s.size());
                ASSERT_EQ(f.matrix.to_dense(), testutil::reference_flattening(s, b));
            }
        }
    }
}

TEST(Flatten, ComplementSideIsTranspose) {
    testutil::Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const QuditDims dims = testutil::random_dims(rng, 6, 3);
        const StateTensor s = testutil::random_state(rng, dims, 20);
        for (const auto& level : all_levels(dims))
            for (const auto& b : level) ASSERT_EQ(flatten(s, b.swapped()).matrix, flatten(s, b).matrix.transpose());
    }
}

TEST(SparseMatrix, AddAndBounds) {
    SparseMatrix m(2, 3);
    m.add(0, 1, 2);
    m.add(0, 1, -2);
    EXPECT_TRUE(m.entries().empty());
    m.add(1, 2, Amplitude::parameter("a"));
    EXPECT_TRUE(m.is_parametric());
    EXPECT_THROW(m.to_dense(), PolicyError);
    EXPECT_THROW(m.add(2, 0, 1), DomainError);
    EXPECT_EQ(dense_rows(m), (std::vector<std::vector<std::string>>{{"0", "0", "0"}, {"0", "0", "a"}}));
}
