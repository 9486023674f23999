#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "groves/pairings.hpp"

using namespace groves;

namespace {

DirectedPairing dp(int n, std::vector<std::pair<int, int>> pairs) {
    return DirectedPairing{n, std::move(pairs)};
}

long binom(int n, int k) {
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// The ten column labels of the six-node connection matrix, in print order.
const std::vector<DirectedPairing> kSixColumns = {
    dp(6, {{1, 2}, {3, 4}, {5, 6}}), dp(6, {{1, 4}, {2, 3}, {5, 6}}),
    dp(6, {{5, 1}, {2, 3}, {4, 6}}), dp(6, {{5, 3}, {1, 2}, {4, 6}}),
    dp(6, {{4, 5}, {1, 2}, {3, 6}}), dp(6, {{4, 2}, {5, 1}, {3, 6}}),
    dp(6, {{3, 4}, {5, 1}, {2, 6}}), dp(6, {{3, 1}, {4, 5}, {2, 6}}),
    dp(6, {{2, 3}, {4, 5}, {1, 6}}), dp(6, {{2, 5}, {3, 4}, {1, 6}}),
};

// The matching row labels.
const std::vector<RowIndex> kSixRows = {
    {{1, 3, 5}, {2, 4, 6}}, {{1, 2, 5}, {4, 3, 6}}, {{5, 2, 4}, {1, 3, 6}},
    {{5, 1, 4}, {3, 2, 6}}, {{4, 1, 3}, {5, 2, 6}}, {{4, 5, 3}, {2, 1, 6}},
    {{3, 5, 2}, {4, 1, 6}}, {{3, 4, 2}, {1, 5, 6}}, {{2, 4, 1}, {3, 5, 6}},
    {{2, 3, 1}, {5, 4, 6}},
};

}  // namespace

TEST_CASE("annular pairings enumerate in the printed column order") {
    CHECK(enumerate_annular_pairings(2) == std::vector<DirectedPairing>{dp(2, {{1, 2}})});

    CHECK(enumerate_annular_pairings(4) ==
          std::vector<DirectedPairing>{dp(4, {{1, 2}, {3, 4}}), dp(4, {{3, 1}, {2, 4}}),
                                       dp(4, {{2, 3}, {1, 4}})});

    CHECK(enumerate_annular_pairings(6) == kSixColumns);
}

TEST_CASE("enumeration counts match half the central binomial") {
    for (int n = 2; n <= 12; n += 2) {
        auto all = enumerate_annular_pairings(n);
        CHECK(static_cast<long>(all.size()) == binom(n, n / 2) / 2);
        std::set<std::string> names;
        for (const auto& p : all) {
            CHECK(annular_embeddable(p));
            names.insert(p.str());
        }
        CHECK(names.size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_annular_pairings(3), Error);
    CHECK_THROWS_AS(enumerate_annular_pairings(0), Error);
}

TEST_CASE("cycle lemma forward reproduces the twelve-node example") {
    RowIndex row{{3, 4, 6, 7, 8, 11}, {1, 2, 5, 9, 10, 12}};
    auto p = cycle_lemma_forward(row);
    CHECK(p == dp(12, {{4, 5}, {6, 2}, {7, 10}, {8, 9}, {11, 1}, {3, 12}}));

    auto tiny = cycle_lemma_forward(RowIndex{{1}, {2}});
    CHECK(tiny == dp(2, {{1, 2}}));
}

TEST_CASE("cycle lemma backward reproduces the reverse example") {
    // Input orientation and pair order are immaterial; the row comes out
    // with destinations in cut order and the outer pair last.
    auto p = dp(12, {{1, 11}, {2, 6}, {3, 12}, {4, 5}, {7, 10}, {8, 9}});
    auto row = cycle_lemma_backward(p);
    CHECK(row == RowIndex{{4, 6, 7, 8, 11, 3}, {5, 2, 10, 9, 1, 12}});

    CHECK(cycle_lemma_backward(dp(2, {{1, 2}})) == RowIndex{{1}, {2}});

    CHECK_THROWS_AS(cycle_lemma_backward(dp(6, {{1, 4}, {2, 5}, {3, 6}})), NotAnnular);
    CHECK_FALSE(annular_embeddable(dp(6, {{1, 4}, {2, 5}, {3, 6}})));
}

TEST_CASE("cycle lemma round trips over all pairings") {
    for (int n = 2; n <= 12; n += 2) {
        for (const auto& p : enumerate_annular_pairings(n)) {
            auto row = cycle_lemma_backward(p);
            CHECK(row.S.back() == n);
            CHECK(cycle_lemma_forward(row) == p);
        }
    }
}

TEST_CASE("row labels of the printed matrices sit on the diagonal") {
    auto four = enumerate_annular_pairings(4);
    std::vector<RowIndex> four_rows = {{{1, 3}, {2, 4}}, {{3, 2}, {1, 4}}, {{2, 1}, {3, 4}}};
    for (size_t i = 0; i < four.size(); ++i) CHECK(cycle_lemma_backward(four[i]) == four_rows[i]);

    auto six = enumerate_annular_pairings(6);
    for (size_t i = 0; i < six.size(); ++i) CHECK(cycle_lemma_backward(six[i]) == kSixRows[i]);
}

TEST_CASE("partition embeddability on the annulus") {
    // {1,3}|{2,4} needs the outer ring: it embeds on the annulus even
    // though it crosses in a disk.
    CHECK(annular_embeddable(Partition{4, {{1, 3}, {2, 4}}}));
    CHECK(annular_embeddable(Partition{6, {{1, 2, 3}, {4, 5, 6}}}));
    CHECK(annular_embeddable(Partition{6, {{1, 3}, {2, 6}, {4}, {5}}}));
    CHECK(annular_embeddable(Partition{8, {{1, 5, 8}, {2, 3, 4}, {6, 7}}}));

    // With node n alone, interleaved inner parts cannot embed.
    CHECK_FALSE(annular_embeddable(Partition{5, {{1, 3}, {2, 4}, {5}}}));
    CHECK_FALSE(annular_embeddable(Partition{6, {{1, 4}, {2, 5}, {3, 6}}}));
    // Part straddling two sectors of node n's part.
    CHECK_FALSE(annular_embeddable(Partition{6, {{1, 3}, {2, 4, 6}, {5}}}));
}

TEST_CASE("reduce_partition reproduces the displayed circular example") {
    Partition sigma{8, {{1, 5, 8}, {2, 3, 4}, {6, 7}}};
    auto terms = reduce_partition(sigma, ReduceMode::circular);
    REQUIRE(terms.size() == 3);

    CHECK(terms[0].first == +1);
    CHECK(terms[0].second == PartialPairing{8, {{1, 8}, {2, 4}, {6, 7}}, {}, {3, 5}});
    CHECK(terms[1].first == -1);
    CHECK(terms[1].second == PartialPairing{8, {{1, 8}, {2, 5}, {6, 7}}, {}, {3, 4}});
    CHECK(terms[2].first == -1);
    CHECK(terms[2].second == PartialPairing{8, {{1, 8}, {2, 4}, {5, 7}}, {}, {3, 6}});
}

TEST_CASE("reduce_partition leaves partial pairings alone") {
    Partition sigma{4, {{1, 2}, {3, 4}}};
    for (auto mode : {ReduceMode::circular, ReduceMode::annular_one}) {
        auto terms = reduce_partition(sigma, mode);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].first == +1);
        CHECK(terms[0].second == PartialPairing{4, {{1, 2}, {3, 4}}, {}, {}});
    }

    Partition with_single{5, {{1, 2}, {3, 5}, {4}}};
    auto terms = reduce_partition(with_single, ReduceMode::annular_one);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].second == PartialPairing{5, {{1, 2}, {3, 5}}, {4}, {}});
}

TEST_CASE("reduce_partition shrinks the outer node's part first") {
    auto terms = reduce_partition(Partition{6, {{1, 2, 3}, {4, 5, 6}}}, ReduceMode::annular_one);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].first == +1);
    CHECK(terms[0].second == PartialPairing{6, {{1, 3}, {4, 6}}, {}, {2, 5}});
    CHECK(terms[1].first == -1);
    CHECK(terms[1].second == PartialPairing{6, {{3, 5}, {4, 6}}, {}, {1, 2}});
}

TEST_CASE("reduce_partition handles a singleton outer part") {
    auto terms = reduce_partition(Partition{5, {{1, 2, 3}, {4}, {5}}}, ReduceMode::annular_one);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].first == +1);
    CHECK(terms[0].second == PartialPairing{5, {{1, 3}}, {4, 5}, {2}});
    CHECK(terms[1].first == -1);
    CHECK(terms[1].second == PartialPairing{5, {{1, 3}, {2, 5}}, {4}, {}});
}

TEST_CASE("reduce_partition structural properties on random partitions") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        int nbuckets = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> buckets(nbuckets);
        for (int v = 1; v < n; ++v) {
            int b = static_cast<int>(rng() % (nbuckets + 1));
            if (b < nbuckets) buckets[b].push_back(v);  // else unlisted
        }
        buckets[static_cast<int>(rng() % nbuckets)].push_back(n);
        Partition sigma{n, {}};
        for (auto& b : buckets)
            if (!b.empty()) sigma.parts.push_back(b);

        size_t npart_size = 0;
        for (const auto& part : sigma.parts)
            if (std::find(part.begin(), part.end(), n) != part.end()) npart_size = part.size();

        auto terms = reduce_partition(sigma, ReduceMode::annular_one);
        for (const auto& [sign, pp] : terms) {
            CHECK((sign == 1 || sign == -1));
            bool n_paired = false;
            std::vector<std::vector<int>> parts;
            for (auto [a, b] : pp.pairs) {
                parts.push_back({a, b});
                if (b == n) n_paired = true;
            }
            for (int v : pp.singletons) parts.push_back({v});
            if (npart_size >= 2) CHECK(n_paired);
            // Every surviving term embeds on the annulus.
            CHECK(annular_embeddable(Partition{n, parts}));
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(reduce_partition(Partition{4, {{1, 2}, {2, 3}}}, ReduceMode::circular), Error);
    CHECK_THROWS_AS(reduce_partition(Partition{4, {{1, 9}}}, ReduceMode::circular), Error);
    CHECK_THROWS_AS(reduce_partition(Partition{6, {{1, 2, 3}}}, ReduceMode::annular_one),
                    NonReducible);
    CHECK_THROWS_AS(cycle_lemma_forward(RowIndex{{1, 2}, {3}}), Error);
    CHECK_THROWS_AS(cycle_lemma_forward(RowIndex{{1, 2}, {3, 5}}), Error);
    CHECK_THROWS_AS(cycle_lemma_backward(dp(4, {{1, 2}, {2, 4}})), Error);
}

TEST_CASE("printing") {
    CHECK(dp(4, {{3, 1}, {2, 4}}).str() == "Z[3<1|2<4]");
    CHECK(RowIndex{{1, 3}, {2, 4}}.str() == "L{1,3}^{2,4}");
    CHECK(Partition{8, {{1, 5, 8}, {2, 3, 4}, {6, 7}}}.str() == "1,5,8|2,3,4|6,7");
    CHECK(PartialPairing{8, {{1, 8}, {2, 4}}, {7}, {3, 5}}.str() == "1,8|2,4|7 (internal: 3 5)");
}
