#include "domlat/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "domlat/lattice.hpp"

namespace domlat {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    return lines;
}

std::string csv_quote(const std::string& field) {
    return "\"" + field + "\"";
}

} // namespace

std::string render_cxt(const FormalContext& ctx, const std::string& name) {
    std::string out;
    out += "B\n";
    out += name;
    out += "\n";
    out += std::to_string(ctx.objects.size()) + "\n";
    out += std::to_string(ctx.attributes.size()) + "\n";
    for (const Partition& g : ctx.objects) {
        out += to_string(g) + "\n";
    }
    for (const Partition& m : ctx.attributes) {
        out += to_string(m) + "\n";
    }
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
            out.push_back(ctx.incident(g, m) ? 'X' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

FormalContext parse_cxt(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() < 4 || lines[0] != "B") {
        throw std::invalid_argument("parse_cxt: missing B header");
    }
    size_t ng = std::stoul(lines[2]);
    size_t nm = std::stoul(lines[3]);
    if (lines.size() < 4 + ng + nm + ng) {
        throw std::invalid_argument("parse_cxt: truncated file");
    }
    FormalContext ctx;
    for (size_t i = 0; i < ng; ++i) {
        ctx.objects.push_back(parse_partition(lines[4 + i]));
    }
    for (size_t i = 0; i < nm; ++i) {
        ctx.attributes.push_back(parse_partition(lines[4 + ng + i]));
    }
    ctx.incidence = BitRows(static_cast<int>(ng), static_cast<int>(nm));
    for (size_t g = 0; g < ng; ++g) {
        const std::string& row = lines[4 + ng + nm + g];
        if (row.size() != nm) {
            throw std::invalid_argument("parse_cxt: row length mismatch");
        }
        for (size_t m = 0; m < nm; ++m) {
            if (row[m] == 'X') {
                ctx.incidence.set(static_cast<int>(g), static_cast<int>(m));
            } else if (row[m] != '.') {
                throw std::invalid_argument("parse_cxt: bad incidence character");
            }
        }
    }
    return ctx;
}

std::string render_csv(const FormalContext& ctx, const ArrowRelations& arrows,
                       const std::string& corner) {
    std::string out = csv_quote(corner);
    for (const Partition& m : ctx.attributes) {
        out += "," + csv_quote(to_string(m));
    }
    out += "\n";
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        out += csv_quote(to_string(ctx.objects[static_cast<size_t>(g)]));
        for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
            out += ",";
            auto cell = std::make_pair(g, m);
            if (ctx.incident(g, m)) {
                out += "X";
            } else if (arrows.dbl.count(cell)) {
                out += "<->";
            } else if (arrows.down.count(cell)) {
                out += "<-";
            } else if (arrows.up.count(cell)) {
                out += "->";
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_context_json(int n, const FormalContext& ctx) {
    nlohmann::json j;
    j["n"] = n;
    j["objects"] = nlohmann::json::array();
    for (const Partition& g : ctx.objects) {
        j["objects"].push_back(to_string(g));
    }
    j["attributes"] = nlohmann::json::array();
    for (const Partition& m : ctx.attributes) {
        j["attributes"].push_back(to_string(m));
    }
    j["incidence"] = nlohmann::json::array();
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        std::string row;
        for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
            row.push_back(ctx.incident(g, m) ? 'X' : '.');
        }
        j["incidence"].push_back(row);
    }
    auto arrow_list = [](const std::vector<PredictedArrow>& arrows) {
        nlohmann::json list = nlohmann::json::array();
        for (const PredictedArrow& pa : arrows) {
            nlohmann::json entry;
            entry["g"] = to_string(pa.g);
            entry["m"] = to_string(pa.m);
            entry["sources"] = nlohmann::json::array();
            for (TheoremTag tag : pa.sources) {
                entry["sources"].push_back(to_string(tag));
            }
            entry["params"] = nlohmann::json::object();
            for (const auto& [name, value] : pa.params) {
                entry["params"][name] = value;
            }
            list.push_back(entry);
        }
        return list;
    };
    j["arrows"]["double"] = arrow_list(double_arrows(n));
    j["arrows"]["down_only"] = arrow_list(single_down_arrows(n));
    j["arrows"]["up_only"] = arrow_list(single_up_arrows(n));
    return j.dump(2) + "\n";
}

std::string render_arrow_lines(const FormalContext& ctx, const ArrowRelations& arrows) {
    struct Line {
        Partition g, m;
        ArrowKind kind;
    };
    std::vector<Line> lines;
    for (const auto& [g, m] : arrows.down) {
        ArrowKind kind = arrows.dbl.count({g, m}) ? ArrowKind::dbl : ArrowKind::down_only;
        lines.push_back({ctx.objects[static_cast<size_t>(g)],
                         ctx.attributes[static_cast<size_t>(m)], kind});
    }
    for (const auto& [g, m] : arrows.up) {
        if (!arrows.dbl.count({g, m})) {
            lines.push_back({ctx.objects[static_cast<size_t>(g)],
                             ctx.attributes[static_cast<size_t>(m)], ArrowKind::up_only});
        }
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        if (x.g != y.g) {
            return x.g > y.g;
        }
        return x.m > y.m;
    });
    std::string out;
    for (const Line& line : lines) {
        out += to_string(line.g) + " " + to_string(line.kind) + " " + to_string(line.m) + "\n";
    }
    return out;
}

std::string render_arrow_lines(const std::vector<PredictedArrow>& arrows) {
    std::vector<PredictedArrow> sorted = arrows;
    std::sort(sorted.begin(), sorted.end(), [](const PredictedArrow& x, const PredictedArrow& y) {
        if (x.g != y.g) {
            return x.g > y.g;
        }
        return x.m > y.m;
    });
    std::string out;
    for (const PredictedArrow& pa : sorted) {
        out += to_string(pa.g) + " " + to_string(pa.kind) + " " + to_string(pa.m);
        for (size_t i = 0; i < pa.sources.size(); ++i) {
            out += i == 0 ? " " : ",";
            out += to_string(pa.sources[i]);
        }
        out += "\n";
    }
    return out;
}

std::string render_enumeration(int n, bool with_covers, bool as_json, int lattice_cap) {
    if (!with_covers) {
        auto parts = enumerate_partitions(n);
        if (as_json) {
            nlohmann::json j;
            j["n"] = n;
            j["count"] = parts.size();
            j["partitions"] = nlohmann::json::array();
            for (const Partition& p : parts) {
                j["partitions"].push_back(to_string(p));
            }
            return j.dump(2) + "\n";
        }
        std::string out;
        for (const Partition& p : parts) {
            out += to_string(p) + "\n";
        }
        return out;
    }
    PartitionLattice lat = PartitionLattice::build(n, lattice_cap);
    if (as_json) {
        nlohmann::json j;
        j["n"] = n;
        j["count"] = lat.elements.size();
        j["partitions"] = nlohmann::json::array();
        j["lower_covers"] = nlohmann::json::object();
        for (size_t i = 0; i < lat.elements.size(); ++i) {
            j["partitions"].push_back(to_string(lat.elements[i]));
            nlohmann::json covers = nlohmann::json::array();
            for (int q : lat.lower_cover_adjacency[i]) {
                covers.push_back(to_string(lat.elements[static_cast<size_t>(q)]));
            }
            j["lower_covers"][to_string(lat.elements[i])] = covers;
        }
        return j.dump(2) + "\n";
    }
    std::string out;
    for (size_t i = 0; i < lat.elements.size(); ++i) {
        out += to_string(lat.elements[i]);
        out += ":";
        for (int q : lat.lower_cover_adjacency[i]) {
            out += " " + to_string(lat.elements[static_cast<size_t>(q)]);
        }
        out += "\n";
    }
    return out;
}

std::string render_dot(int n, bool with_arrows, int lattice_cap) {
    PartitionLattice lat = PartitionLattice::build(n, lattice_cap);
    std::map<Partition, int> kind; // bit 0: join-irreducible, bit 1: meet-irreducible
    if (n >= 1) {
        for (const auto& info : join_irreducibles(n)) {
            kind[info.partition] |= 1;
        }
        for (const auto& info : meet_irreducibles(n)) {
            kind[info.partition] |= 2;
        }
    }
    std::ostringstream out;
    out << "digraph lattice_" << n << " {\n";
    out << "  rankdir=TB;\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (const Partition& p : lat.elements) {
        const char* shape = "ellipse";
        switch (kind.count(p) ? kind[p] : 0) {
            case 1: shape = "box"; break;      // join-irreducible only
            case 2: shape = "diamond"; break;  // meet-irreducible only
            case 3: shape = "Msquare"; break;  // doubly irreducible
            default: break;
        }
        out << "  \"" << to_string(p) << "\" [shape=" << shape << "];\n";
    }
    for (size_t i = 0; i < lat.elements.size(); ++i) {
        for (int q : lat.lower_cover_adjacency[i]) {
            out << "  \"" << to_string(lat.elements[i]) << "\" -> \""
                << to_string(lat.elements[static_cast<size_t>(q)])
                << "\" [dir=none];\n";
        }
    }
    if (with_arrows && n >= 2) {
        auto ji = join_irreducibles(n);
        auto mi = meet_irreducibles(n);
        ArrowRelations ar = arrows_via_covers(ji, mi);
        auto gname = [&](int g) { return to_string(ji[static_cast<size_t>(g)].partition); };
        auto mname = [&](int m) { return to_string(mi[static_cast<size_t>(m)].partition); };
        for (const auto& [g, m] : ar.dbl) {
            out << "  \"" << gname(g) << "\" -> \"" << mname(m)
                << "\" [style=dashed, color=\"green:red\", dir=both,"
                << " arrowhead=empty, arrowtail=normal];\n";
        }
        for (const auto& [g, m] : ar.up) {
            if (ar.dbl.count({g, m})) {
                continue;
            }
            out << "  \"" << gname(g) << "\" -> \"" << mname(m)
                << "\" [style=dashed, color=green, arrowhead=empty];\n";
        }
        for (const auto& [g, m] : ar.down) {
            if (ar.dbl.count({g, m})) {
                continue;
            }
            out << "  \"" << mname(m) << "\" -> \"" << gname(g)
                << "\" [style=dashed, color=red, arrowhead=normal];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string render_closures(int n, const std::string& generator) {
    auto ji = join_irreducibles(n);
    auto mi = meet_irreducibles(n);
    FormalContext ctx = standard_context(n, ji, mi);
    ArrowRelations arrows = arrows_via_covers(ji, mi);
    auto describe = [&](const Subcontext& sub) {
        std::string line;
        const Partition& gen = sub.generator.side == Generator::Side::object
                                   ? ctx.objects[static_cast<size_t>(sub.generator.index)]
                                   : ctx.attributes[static_cast<size_t>(sub.generator.index)];
        line += "generator=" + to_string(gen);
        line += " size=" + std::to_string(sub.object_subset.size()) + "x" +
                std::to_string(sub.attribute_subset.size());
        line += " H={";
        for (size_t i = 0; i < sub.object_subset.size(); ++i) {
            line += (i ? ";" : "") + to_string(ctx.objects[static_cast<size_t>(sub.object_subset[i])]);
        }
        line += "} N={";
        for (size_t i = 0; i < sub.attribute_subset.size(); ++i) {
            line += (i ? ";" : "") +
                    to_string(ctx.attributes[static_cast<size_t>(sub.attribute_subset[i])]);
        }
        line += "}";
        return line;
    };
    std::string out;
    if (!generator.empty()) {
        Partition gen = parse_partition(generator);
        Generator start;
        auto git = std::find(ctx.objects.begin(), ctx.objects.end(), gen);
        if (git != ctx.objects.end()) {
            start = {Generator::Side::object, static_cast<int>(git - ctx.objects.begin())};
        } else {
            auto mit = std::find(ctx.attributes.begin(), ctx.attributes.end(), gen);
            if (mit == ctx.attributes.end()) {
                throw std::invalid_argument("closures: generator " + generator +
                                            " is not an object or attribute");
            }
            start = {Generator::Side::attribute,
                     static_cast<int>(mit - ctx.attributes.begin())};
        }
        out += describe(one_generated_closure(ctx, arrows, start)) + "\n";
        return out;
    }
    for (const Subcontext& sub : all_one_generated_closures(ctx, arrows)) {
        out += describe(sub) + "\n";
    }
    return out;
}

} // namespace domlat
