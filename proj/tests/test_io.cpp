#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "domlat/io.hpp"
#include "domlat/verify.hpp"

using namespace domlat;

namespace {

int count_lines_containing(const std::string& text, const std::string& needle) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(needle) != std::string::npos) {
            ++count;
        }
    }
    return count;
}

std::string csv_cell(const std::string& csv, const std::string& row_label,
                     const std::string& col_label) {
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    auto split_quoted = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') {
                quoted = !quoted;
            } else if (ch == ',' && !quoted) {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        fields.push_back(cur);
        return fields;
    };
    auto headers = split_quoted(header);
    size_t col = 0;
    for (size_t i = 1; i < headers.size(); ++i) {
        if (headers[i] == col_label) {
            col = i;
        }
    }
    REQUIRE(col > 0);
    std::string line;
    while (std::getline(in, line)) {
        auto fields = split_quoted(line);
        if (!fields.empty() && fields[0] == row_label) {
            return fields[col];
        }
    }
    FAIL("row not found: ", row_label);
    return {};
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("cxt format is fixed byte for byte") {
    FormalContext ctx = standard_context(2);
    CHECK(render_cxt(ctx, "K(L_2)") == "B\nK(L_2)\n1\n1\n2\n1,1\n.\n");
}

TEST_CASE("cxt round-trips for n=2..12") {
    for (int n = 2; n <= 12; ++n) {
        FormalContext ctx = standard_context(n);
        std::string text = render_cxt(ctx, "K(L_" + std::to_string(n) + ")");
        FormalContext parsed = parse_cxt(text);
        REQUIRE(parsed.objects == ctx.objects);
        REQUIRE(parsed.attributes == ctx.attributes);
        for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
            for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
                REQUIRE(parsed.incident(g, m) == ctx.incident(g, m));
            }
        }
        REQUIRE(render_cxt(parsed, "K(L_" + std::to_string(n) + ")") == text);
    }
    CHECK_THROWS_AS(parse_cxt("not a context"), std::invalid_argument);
}

TEST_CASE("csv cross table carries the arrow glyphs") {
    FormalContext ctx = standard_context(7);
    std::string csv = render_csv(ctx, arrows_via_covers(7), "K(L_7)");
    CHECK(csv_cell(csv, "4,1,1,1", "3,2,2") == "<-");
    CHECK(csv_cell(csv, "3,3,1", "4,1,1,1") == "->");
    CHECK(csv_cell(csv, "7", "6,1") == "<->");
    CHECK(csv_cell(csv, "5,1,1", "5,1,1") == "X");
    CHECK(csv_cell(csv, "7", "1,1,1,1,1,1,1").empty());

    // glyph totals of the n=7 table: 58 crosses, 11 doubles, one single each
    auto count_glyph = [&](const std::string& glyph) {
        int total = 0;
        for (const Partition& g : ctx.objects) {
            for (const Partition& m : ctx.attributes) {
                if (csv_cell(csv, to_string(g), to_string(m)) == glyph) {
                    ++total;
                }
            }
        }
        return total;
    };
    CHECK(count_glyph("X") == 58);
    CHECK(count_glyph("<->") == 11);
    CHECK(count_glyph("<-") == 1);
    CHECK(count_glyph("->") == 1);
}

TEST_CASE("json context carries provenance-tagged arrows") {
    FormalContext ctx = standard_context(7);
    auto j = nlohmann::json::parse(render_context_json(7, ctx));
    CHECK(j["n"] == 7);
    CHECK(j["objects"].size() == 11);
    CHECK(j["attributes"].size() == 11);
    CHECK(j["incidence"].size() == 11);
    CHECK(j["arrows"]["double"].size() == 11);
    CHECK(j["arrows"]["down_only"].size() == 1);
    CHECK(j["arrows"]["up_only"].size() == 1);
    CHECK(j["arrows"]["down_only"][0]["g"] == "4,1,1,1");
    CHECK(j["arrows"]["down_only"][0]["sources"][0] == "Cdown1");
    CHECK(j["arrows"]["down_only"][0]["params"]["t"] == 2);
}

TEST_CASE("arrow line listings") {
    auto doubles = double_arrows(7);
    auto downs = single_down_arrows(7);
    auto ups = single_up_arrows(7);
    std::vector<PredictedArrow> all = doubles;
    all.insert(all.end(), downs.begin(), downs.end());
    all.insert(all.end(), ups.begin(), ups.end());
    std::string lines = render_arrow_lines(all);
    CHECK(count_lines_containing(lines, "4,1,1,1 <- 3,2,2 Cdown1") == 1);
    CHECK(count_lines_containing(lines, "3,3,1 -> 4,1,1,1 DualCdown1") == 1);
    CHECK(count_lines_containing(lines, "7 <-> 6,1 AB,C") == 1);

    std::string lines13 = render_arrow_lines(single_down_arrows(13));
    CHECK(count_lines_containing(lines13, "4,4,4,1 <- 5,3,3,2 ABCDdownIV") == 1);

    FormalContext ctx2 = standard_context(2);
    CHECK(render_arrow_lines(ctx2, arrows_via_covers(2)) == "2 <-> 1,1\n");
}

TEST_CASE("enumeration rendering") {
    CHECK(render_enumeration(4, false, false, 15) == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    CHECK(render_enumeration(0, false, false, 15) == "0\n");
    std::string covers = render_enumeration(4, true, false, 15);
    CHECK(count_lines_containing(covers, "4: 3,1") == 1);
    auto j = nlohmann::json::parse(render_enumeration(4, false, true, 15));
    CHECK(j["count"] == 5);
}

TEST_CASE("dot rendering") {
    std::string dot2 = render_dot(2, true, 15);
    CHECK(count_lines_containing(dot2, "[dir=none]") == 1);
    CHECK(count_lines_containing(dot2, "shape=") == 2);

    std::string dot7 = render_dot(7, true, 15);
    CHECK(count_lines_containing(dot7, "shape=") == 15);
    int arrow_edges = count_lines_containing(dot7, "style=dashed");
    CHECK(arrow_edges == 13); // 11 double edges + 1 up + 1 down

    std::string dot11 = render_dot(11, false, 15);
    CHECK(count_lines_containing(dot11, "shape=") == 56);
    CHECK(count_lines_containing(dot11, "style=dashed") == 0);
}

TEST_CASE("closure listings") {
    CHECK(render_closures(7, "3,3,1") ==
          "generator=3,3,1 size=3x3 H={4,1,1,1;3,3,1;3,2,2} N={4,1,1,1;3,3,1;3,2,2}\n");
    CHECK(render_closures(7, "7") == "generator=7 size=1x1 H={7} N={6,1}\n");
    // attributes work as generators too; (5,2) only appears on the attribute side
    CHECK(render_closures(7, "5,2") == "generator=5,2 size=1x1 H={6,1} N={5,2}\n");
    CHECK(count_lines_containing(render_closures(3, ""), "generator=") == 2);
    CHECK(count_lines_containing(render_closures(7, ""), "size=1x1") == 10);
}

TEST_CASE("writers are deterministic") {
    FormalContext ctx = standard_context(9);
    ArrowRelations ar = arrows_via_covers(9);
    CHECK(render_cxt(ctx, "x") == render_cxt(standard_context(9), "x"));
    CHECK(render_csv(ctx, ar, "x") == render_csv(ctx, ar, "x"));
    CHECK(render_context_json(9, ctx) == render_context_json(9, ctx));
    CHECK(render_dot(9, true, 15) == render_dot(9, true, 15));
}

TEST_CASE("verify harness") {
    VerifyOptions options;
    auto results = verify_range(2, 12, options);
    REQUIRE(results.size() == 11);
    for (const auto& r : results) {
        CHECK(r.pass);
        CHECK(r.line.find("PASS") != std::string::npos);
    }
    CHECK(results[5].line.find("n=7 doubles=11 down_only=1 up_only=1") == 0);
    CHECK(results[1].line.find("1x1_closures=2 expected=2") != std::string::npos);
}

TEST_SUITE_END();
