#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "domlat/context.hpp"
#include "domlat/theorems.hpp"

using namespace domlat;

namespace {

std::set<std::pair<Partition, Partition>> pair_set(const std::vector<PredictedArrow>& arrows) {
    std::set<std::pair<Partition, Partition>> out;
    for (const auto& pa : arrows) {
        out.emplace(pa.g, pa.m);
    }
    return out;
}

std::set<Partition> partners_of(const std::vector<PredictedArrow>& arrows, const char* g) {
    Partition gp = parse_partition(g);
    std::set<Partition> out;
    for (const auto& pa : arrows) {
        if (pa.g == gp) {
            out.insert(pa.m);
        }
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("theorems");

TEST_CASE("double-arrow examples") {
    CHECK(pair_set(double_arrows(5)).count({parse_partition("2,2,1"), parse_partition("2,1,1,1")}));
    CHECK(pair_set(double_arrows(4)).count({parse_partition("3,1"), parse_partition("2,2")}));
    CHECK(partners_of(double_arrows(10), "4,4,1,1") ==
          std::set<Partition>{parse_partition("4,3,3"), parse_partition("5,2,2,1")});
    CHECK(double_arrows(2).size() == 1);
    CHECK(pair_set(double_arrows(2)).count({parse_partition("2"), parse_partition("1,1")}));
}

TEST_CASE("overlapping families are merged with both sources") {
    for (const PredictedArrow& pa : double_arrows(7)) {
        if (pa.g == parse_partition("7")) {
            CHECK(pa.m == parse_partition("6,1"));
            CHECK(pa.sources == std::vector<TheoremTag>{TheoremTag::AB, TheoremTag::C});
        }
        if (pa.g == parse_partition("2,1,1,1,1,1")) {
            CHECK(pa.m == parse_partition("1,1,1,1,1,1,1"));
            CHECK(pa.sources == std::vector<TheoremTag>{TheoremTag::AB, TheoremTag::C});
        }
    }
    std::map<std::pair<Partition, Partition>, int> seen;
    for (const PredictedArrow& pa : double_arrows(12)) {
        CHECK(++seen[{pa.g, pa.m}] == 1);
    }
}

TEST_CASE("single down-arrow examples") {
    auto d7 = single_down_arrows(7);
    REQUIRE(d7.size() == 1);
    CHECK(d7[0].g == parse_partition("4,1,1,1"));
    CHECK(d7[0].m == parse_partition("3,2,2"));
    CHECK(d7[0].sources == std::vector<TheoremTag>{TheoremTag::Cdown1});

    CHECK(partners_of(single_down_arrows(16), "7,1,1,1,1,1,1,1,1,1") ==
          std::set<Partition>{parse_partition("6,5,5"), parse_partition("6,4,4,2"),
                              parse_partition("6,3,3,3,1"), parse_partition("6,2,2,2,2,2")});
    CHECK(partners_of(single_down_arrows(15), "5,5,5") ==
          std::set<Partition>{parse_partition("10,2,2,1"), parse_partition("8,3,3,1"),
                              parse_partition("6,4,4,1")});
    CHECK(pair_set(single_down_arrows(13))
              .count({parse_partition("4,4,4,1"), parse_partition("5,3,3,2")}));
    CHECK(partners_of(single_down_arrows(12), "4,4,4") ==
          std::set<Partition>{parse_partition("7,2,2,1"), parse_partition("5,3,3,1")});
}

TEST_CASE("single up-arrow examples") {
    auto u7 = single_up_arrows(7);
    REQUIRE(u7.size() == 1);
    CHECK(u7[0].g == parse_partition("3,3,1"));
    CHECK(u7[0].m == parse_partition("4,1,1,1"));
    CHECK(u7[0].sources == std::vector<TheoremTag>{TheoremTag::DualCdown1});

    CHECK(pair_set(single_up_arrows(9)).count({parse_partition("4,3,1,1"), parse_partition("3,3,3")}));
    CHECK(pair_set(single_up_arrows(13))
              .count({parse_partition("4,4,3,1,1"), parse_partition("4,3,3,3")}));
}

TEST_CASE("conjugation route equals the dual closed forms for n=2..20") {
    for (int n = 2; n <= 20; ++n) {
        CHECK(pair_set(single_up_arrows(n)) == pair_set(single_up_arrows_direct(n)));
    }
}

TEST_CASE("single arrows first appear at n=7") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(single_down_arrows(n).empty());
        CHECK(single_up_arrows(n).empty());
    }
    CHECK_FALSE(single_down_arrows(7).empty());
    CHECK_FALSE(single_up_arrows(7).empty());
}

TEST_CASE("predicted arrows equal the brute force for n=2..14") {
    for (int n = 2; n <= 14; ++n) {
        CHECK(predicted_arrows(n) == arrows_bruteforce(standard_context(n)));
    }
}

TEST_CASE("predicted endpoints are irreducible with the advertised parameters") {
    for (int n = 2; n <= 20; ++n) {
        auto doubles = double_arrows(n);
        auto downs = single_down_arrows(n);
        auto ups = single_up_arrows(n);
        std::vector<PredictedArrow> all = doubles;
        all.insert(all.end(), downs.begin(), downs.end());
        all.insert(all.end(), ups.begin(), ups.end());
        for (const PredictedArrow& pa : all) {
            REQUIRE(classify_join_type(pa.g).has_value());
            REQUIRE(classify_meet_type(pa.m).has_value());
            REQUIRE(pa.g.n() == n);
            REQUIRE(pa.m.n() == n);
        }
        for (const PredictedArrow& pa : downs) {
            CHECK(classify_meet_type(pa.m)->first == MeetType::IV);
        }
        for (const PredictedArrow& pa : ups) {
            CHECK(classify_join_type(pa.g)->first == JoinType::D);
        }
    }
}

TEST_CASE("double arrows segregate the types and are a partial bijection") {
    for (int n = 3; n <= 20; ++n) {
        std::map<Partition, int> g_partners;
        std::map<Partition, int> m_partners;
        for (const PredictedArrow& pa : double_arrows(n)) {
            JoinType jt = classify_join_type(pa.g)->first;
            MeetType mt = classify_meet_type(pa.m)->first;
            CHECK((jt == JoinType::D) == (mt == MeetType::IV));
            if (jt != JoinType::D) {
                ++g_partners[pa.g];
                ++m_partners[pa.m];
            }
        }
        for (const auto& info : join_irreducibles(n)) {
            if (info.join_type() != JoinType::D) {
                CHECK(g_partners[info.partition] == 1);
            }
        }
        for (const auto& info : meet_irreducibles(n)) {
            if (info.meet_type() != MeetType::IV) {
                CHECK(m_partners[info.partition] == 1);
            }
        }
    }
}

TEST_CASE("no arrows between B and II nor between C and III") {
    for (int n = 2; n <= 20; ++n) {
        auto doubles = double_arrows(n);
        auto downs = single_down_arrows(n);
        auto ups = single_up_arrows(n);
        std::vector<PredictedArrow> all = doubles;
        all.insert(all.end(), downs.begin(), downs.end());
        all.insert(all.end(), ups.begin(), ups.end());
        for (const PredictedArrow& pa : all) {
            JoinType jt = classify_join_type(pa.g)->first;
            MeetType mt = classify_meet_type(pa.m)->first;
            CHECK_FALSE((jt == JoinType::B && mt == MeetType::II));
            CHECK_FALSE((jt == JoinType::C && mt == MeetType::III));
        }
    }
}

TEST_CASE("the prediction is self-dual under conjugation") {
    for (int n = 2; n <= 20; ++n) {
        auto downs = pair_set(single_down_arrows(n));
        auto ups = pair_set(single_up_arrows(n));
        auto doubles = pair_set(double_arrows(n));
        for (const auto& [g, m] : downs) {
            CHECK(ups.count({conjugate(m), conjugate(g)}));
        }
        for (const auto& [g, m] : doubles) {
            CHECK(doubles.count({conjugate(m), conjugate(g)}));
        }
    }
}

TEST_CASE("first occurrences of the sixteen patterns") {
    auto rows = first_occurrence_report(16);
    REQUIRE(rows.size() == 16);
    const int expected_n[16] = {2, 3, 3, 4, 5, 4, 5, 7, 7, 9, 10, 13, 7, 9, 10, 13};
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].first_n == expected_n[i]);
    }
    // unique-witness rows are pinned exactly
    CHECK(rows[0].g == parse_partition("2"));
    CHECK(rows[0].m == parse_partition("1,1"));
    CHECK(rows[7].g == parse_partition("3,3,1"));
    CHECK(rows[7].m == parse_partition("3,2,2"));
    CHECK(rows[8].g == parse_partition("4,1,1,1"));
    CHECK(rows[8].m == parse_partition("3,2,2"));
    CHECK(rows[11].g == parse_partition("4,4,4,1"));
    CHECK(rows[11].m == parse_partition("5,3,3,2"));
    CHECK_THROWS_AS(first_occurrence_report(12), std::invalid_argument);
}

TEST_SUITE_END();
