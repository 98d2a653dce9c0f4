#include <doctest.h>

#include <algorithm>
#include <set>

#include "domlat/irreducibles.hpp"
#include "domlat/lattice.hpp"

using namespace domlat;

namespace {

std::set<Partition> partition_set(const std::vector<IrreducibleInfo>& infos) {
    std::set<Partition> out;
    for (const auto& info : infos) {
        out.insert(info.partition);
    }
    return out;
}

std::vector<int> runs(std::initializer_list<std::pair<int, int>> segments) {
    std::vector<int> parts;
    for (auto [value, count] : segments) {
        parts.insert(parts.end(), static_cast<size_t>(count), value);
    }
    return parts;
}

} // namespace

TEST_SUITE_BEGIN("irreducibles");

TEST_CASE("the eleven join- and meet-irreducibles of n=7") {
    std::set<Partition> expected_join = {
        make_partition({2, 1, 1, 1, 1, 1}), make_partition({2, 2, 1, 1, 1}),
        make_partition({2, 2, 2, 1}),       make_partition({3, 1, 1, 1, 1}),
        make_partition({3, 2, 2}),          make_partition({3, 3, 1}),
        make_partition({4, 1, 1, 1}),       make_partition({4, 3}),
        make_partition({5, 1, 1}),          make_partition({6, 1}),
        make_partition({7})};
    std::set<Partition> expected_meet = {
        make_partition({1, 1, 1, 1, 1, 1, 1}), make_partition({2, 1, 1, 1, 1, 1}),
        make_partition({2, 2, 2, 1}),          make_partition({3, 1, 1, 1, 1}),
        make_partition({3, 2, 2}),             make_partition({3, 3, 1}),
        make_partition({4, 1, 1, 1}),          make_partition({4, 3}),
        make_partition({5, 1, 1}),             make_partition({5, 2}),
        make_partition({6, 1})};
    CHECK(partition_set(join_irreducibles(7)) == expected_join);
    CHECK(partition_set(meet_irreducibles(7)) == expected_meet);
}

TEST_CASE("classification examples") {
    auto d = classify_join_type(make_partition({3, 3, 1}));
    REQUIRE(d.has_value());
    CHECK(d->first == JoinType::D);
    CHECK(d->second.k == 3);
    CHECK(d->second.b == 0);
    CHECK(d->second.ell == 2);
    CHECK(d->second.d == 1);

    auto iv = classify_meet_type(make_partition({3, 2, 2}));
    REQUIRE(iv.has_value());
    CHECK(iv->first == MeetType::IV);
    CHECK(iv->second.a == 3);
    CHECK(iv->second.t == 2);
    CHECK(iv->second.c == 2);
    CHECK(iv->second.r == 0);

    auto b = classify_join_type(make_partition({2, 1}));
    REQUIRE(b.has_value());
    CHECK(b->first == JoinType::B);
    auto ii = classify_meet_type(make_partition({2, 1}));
    REQUIRE(ii.has_value());
    CHECK(ii->first == MeetType::II);

    CHECK_FALSE(classify_join_type(make_partition({3, 2, 1})).has_value());
    CHECK_FALSE(classify_meet_type(make_partition({3, 2, 1})).has_value());
    CHECK_FALSE(classify_join_type(Partition{}).has_value());
}

TEST_CASE("irreducibles are empty for n=1 and minimal for n=2") {
    CHECK(join_irreducibles(1).empty());
    CHECK(meet_irreducibles(1).empty());

    auto ji2 = join_irreducibles(2);
    REQUIRE(ji2.size() == 1);
    CHECK(ji2[0].partition == make_partition({2}));
    CHECK(ji2[0].join_type() == JoinType::A);
    auto mi2 = meet_irreducibles(2);
    REQUIRE(mi2.size() == 1);
    CHECK(mi2[0].partition == make_partition({1, 1}));
    CHECK(mi2[0].meet_type() == MeetType::I);
}

TEST_CASE("cover counting characterizes the taxonomy up to n=12") {
    for (int n = 2; n <= 12; ++n) {
        std::set<Partition> one_lower;
        std::set<Partition> one_upper;
        for (const Partition& p : enumerate_partitions(n)) {
            if (lower_covers(p).size() == 1) {
                one_lower.insert(p);
            }
            if (upper_covers(p).size() == 1) {
                one_upper.insert(p);
            }
        }
        CHECK(partition_set(join_irreducibles(n)) == one_lower);
        CHECK(partition_set(meet_irreducibles(n)) == one_upper);
    }
}

TEST_CASE("lists are descending lex and classification is consistent") {
    for (int n = 2; n <= 20; ++n) {
        auto ji = join_irreducibles(n);
        auto mi = meet_irreducibles(n);
        CHECK(ji.size() == mi.size()); // conjugation is a bijection between them
        for (size_t i = 1; i < ji.size(); ++i) {
            CHECK(ji[i - 1].partition > ji[i].partition);
        }
        for (size_t i = 1; i < mi.size(); ++i) {
            CHECK(mi[i - 1].partition > mi[i].partition);
        }
        for (const auto& info : ji) {
            auto c = classify_join_type(info.partition);
            REQUIRE(c.has_value());
            CHECK(c->first == info.join_type());
            CHECK(join_template(c->first, c->second) == info.partition);
        }
        for (const auto& info : mi) {
            auto c = classify_meet_type(info.partition);
            REQUIRE(c.has_value());
            CHECK(c->first == info.meet_type());
            CHECK(meet_template(c->first, c->second) == info.partition);
        }
    }
}

TEST_CASE("conjugation swaps the paired type classes up to n=20") {
    for (int n = 2; n <= 20; ++n) {
        for (const auto& info : join_irreducibles(n)) {
            auto c = classify_meet_type(conjugate(info.partition));
            REQUIRE(c.has_value());
            CHECK(c->first == dual_type(info.join_type()));
        }
        for (const auto& info : meet_irreducibles(n)) {
            auto c = classify_join_type(conjugate(info.partition));
            REQUIRE(c.has_value());
            CHECK(c->first == dual_type(info.meet_type()));
        }
    }
}

TEST_CASE("unique covers agree with the cover oracle up to n=12") {
    for (int n = 2; n <= 12; ++n) {
        for (const auto& info : join_irreducibles(n)) {
            auto covers = lower_covers(info.partition);
            REQUIRE(covers.size() == 1);
            CHECK(covers.front() == info.unique_cover);
        }
        for (const auto& info : meet_irreducibles(n)) {
            auto covers = upper_covers(info.partition);
            REQUIRE(covers.size() == 1);
            CHECK(covers.front() == info.unique_cover);
        }
    }
}

TEST_CASE("unique covers match the closed-form shapes up to n=30") {
    for (int n = 2; n <= 30; ++n) {
        for (const auto& info : join_irreducibles(n)) {
            const auto& q = info.params;
            Partition expected;
            switch (info.join_type()) {
                case JoinType::A:
                    expected = q.ell == 1
                                   ? Partition(runs({{q.k - 1, 1}, {1, 1}}))
                                   : Partition(runs({{q.k, q.ell - 1}, {q.k - 1, 1}, {1, 1}}));
                    break;
                case JoinType::B:
                    // for k=2 a brick slips across the whole run of ones
                    expected = q.k == 2
                                   ? Partition(runs({{2, q.b - 1}, {1, q.ell + 2}}))
                                   : Partition(runs({{q.k, q.b}, {q.k - 1, q.ell - 1},
                                                     {q.k - 2, 1}, {1, 1}}));
                    break;
                case JoinType::C:
                    expected = Partition(runs({{q.k - 1, 1}, {2, 1}, {1, q.d - 1}}));
                    break;
                case JoinType::D:
                    expected = Partition(runs({{q.k + 1, q.b}, {q.k, q.ell - 1},
                                               {q.k - 1, 1}, {2, 1}, {1, q.d - 1}}));
                    break;
            }
            CHECK(info.unique_cover == expected);
        }
        for (const auto& info : meet_irreducibles(n)) {
            const auto& q = info.params;
            if (info.meet_type() == MeetType::III) {
                CHECK(info.unique_cover ==
                      Partition(runs({{q.a, 1}, {2, 1}, {1, q.c - 2}})));
            } else if (info.meet_type() == MeetType::IV) {
                CHECK(info.unique_cover ==
                      Partition(runs({{q.a, 1}, {q.t + 1, 1}, {q.t, q.c - 2},
                                      {q.t - 1, 1}, {q.r, q.r > 0 ? 1 : 0}})));
            }
        }
    }
}

TEST_CASE("two-row and near-hook families have the expected covers") {
    // (2,...,2,1,...,1) slips into (2,...,2,1,...,1,1)
    CHECK(join_irreducibles(8)[join_irreducibles(8).size() - 1].partition ==
          make_partition({2, 1, 1, 1, 1, 1, 1}));
    for (int b = 1; b <= 6; ++b) {
        for (int d = 0; d <= 6; ++d) {
            Partition g(runs({{2, b}, {1, d}}));
            auto covers = lower_covers(g);
            REQUIRE(covers.size() == 1);
            CHECK(covers.front() == Partition(runs({{2, b - 1}, {1, d + 2}})));
        }
    }
    // (b,1,...,1) of total 2b+d has upper cover (b,2,1,...,1)
    for (int b = 2; b <= 6; ++b) {
        for (int d = 0; d <= 6; ++d) {
            Partition m(runs({{b, 1}, {1, b + d}}));
            auto covers = upper_covers(m);
            REQUIRE(covers.size() == 1);
            CHECK(covers.front() == Partition(runs({{b, 1}, {2, 1}, {1, b + d - 2}})));
        }
    }
}

TEST_SUITE_END();
