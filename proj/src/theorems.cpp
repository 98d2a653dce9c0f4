#include "domlat/theorems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace domlat {

std::string to_string(ArrowKind k) {
    switch (k) {
        case ArrowKind::dbl: return "<->";
        case ArrowKind::down_only: return "<-";
        case ArrowKind::up_only: return "->";
    }
    return "?";
}

std::string to_string(TheoremTag t) {
    switch (t) {
        case TheoremTag::AB: return "AB";
        case TheoremTag::C: return "C";
        case TheoremTag::CD: return "CD";
        case TheoremTag::Cdown1: return "Cdown1";
        case TheoremTag::ABCDdownIV: return "ABCDdownIV";
        case TheoremTag::DualCdown1: return "DualCdown1";
        case TheoremTag::DualABCDdownIV: return "DualABCDdownIV";
    }
    return "?";
}

namespace {

std::vector<int> build_parts(std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> parts;
    for (auto [value, count] : runs) {
        for (int i = 0; i < count; ++i) {
            parts.push_back(value);
        }
    }
    return parts;
}

using Params = std::vector<std::pair<std::string, int>>;

struct Collector {
    std::map<std::pair<Partition, Partition>, PredictedArrow> merged;

    void add(Partition g, Partition m, ArrowKind kind, TheoremTag tag, Params params) {
        auto key = std::make_pair(g, m);
        auto it = merged.find(key);
        if (it == merged.end()) {
            PredictedArrow pa;
            pa.g = std::move(g);
            pa.m = std::move(m);
            pa.kind = kind;
            pa.sources = {tag};
            pa.params = std::move(params);
            merged.emplace(std::move(key), std::move(pa));
        } else {
            if (it->second.kind != kind) {
                throw std::logic_error("conflicting arrow kinds for one pair");
            }
            auto& sources = it->second.sources;
            if (std::find(sources.begin(), sources.end(), tag) == sources.end()) {
                sources.push_back(tag);
                std::sort(sources.begin(), sources.end());
            }
        }
    }

    /// Canonical output order: g descending lex, then m descending lex.
    std::vector<PredictedArrow> take() {
        std::vector<PredictedArrow> out;
        out.reserve(merged.size());
        for (auto& [key, pa] : merged) {
            out.push_back(std::move(pa));
        }
        std::sort(out.begin(), out.end(), [](const PredictedArrow& x, const PredictedArrow& y) {
            if (x.g != y.g) {
                return x.g > y.g;
            }
            return x.m > y.m;
        });
        return out;
    }
};

/// Visits every type-D parameter tuple (k,b,l,d) with b(k+1)+lk+d = n.
template <typename Fn>
void for_each_type_d(int n, Fn&& fn) {
    for (int k = 3; 2 * k + 1 <= n; ++k) {
        for (int w = 2; w * k + 1 <= n; ++w) {
            for (int b = 0; b < w && w * k + b + 1 <= n; ++b) {
                int d = n - w * k - b;
                fn(k, b, w - b, d); // d >= 1 by the loop bounds
            }
        }
    }
}

} // namespace

std::vector<PredictedArrow> double_arrows(int n) {
    if (n < 2) {
        throw std::invalid_argument("double_arrows: n must be >= 2");
    }
    Collector out;
    // AB family: one pair per object width w.
    for (int w = 1; w <= n - 1; ++w) {
        int k = n / w;
        int b = n % w;
        int ell = w - b;
        Partition g(build_parts({{k + 1, b}, {k, ell}}));
        Partition m(build_parts({{n - w, 1}, {1, w}}));
        out.add(std::move(g), std::move(m), ArrowKind::dbl, TheoremTag::AB,
                {{"k", k}, {"b", b}, {"l", ell}});
    }
    // C family: one pair per object height k.
    for (int k = 2; k <= n; ++k) {
        int t = n / (k - 1);
        int r = n % (k - 1);
        Partition g(build_parts({{k, 1}, {1, n - k}}));
        Partition m(build_parts({{k - 1, t}, {r, r > 0 ? 1 : 0}}));
        out.add(std::move(g), std::move(m), ArrowKind::dbl, TheoremTag::C,
                {{"k", k}, {"t", t}, {"r", r}});
    }
    // CD family: one pair per type-D object and admissible t.
    for_each_type_d(n, [&](int k, int b, int ell, int d) {
        Partition g(build_parts({{k + 1, b}, {k, ell}, {1, d}}));
        for (int t = 2; t <= std::min(k - 1, d + 1); ++t) {
            int a = b + (b + ell) * (k - t) + t - 1;
            int c = (n - a) / t;
            int r = (n - a) % t;
            Partition m(build_parts({{a, 1}, {t, c}, {r, r > 0 ? 1 : 0}}));
            out.add(g, std::move(m), ArrowKind::dbl, TheoremTag::CD,
                    {{"k", k}, {"b", b}, {"l", ell}, {"d", d}, {"t", t},
                     {"a", a}, {"c", c}, {"r", r}});
        }
    });
    return out.take();
}

std::vector<PredictedArrow> single_down_arrows(int n) {
    if (n < 2) {
        throw std::invalid_argument("single_down_arrows: n must be >= 2");
    }
    Collector out;
    // Cdown1 family: heads k >= 4 over a body of ones.
    for (int k = 4; k <= n - 1; ++k) {
        int d = n - k;
        for (int t = 2; t <= k - 2 && 2 * t <= d + 1; ++t) {
            int c = (n - (k - 1)) / t;
            int r = (n - (k - 1)) % t;
            Partition g(build_parts({{k, 1}, {1, d}}));
            Partition m(build_parts({{k - 1, 1}, {t, c}, {r, r > 0 ? 1 : 0}}));
            out.add(std::move(g), std::move(m), ArrowKind::down_only, TheoremTag::Cdown1,
                    {{"k", k}, {"d", d}, {"t", t}, {"c", c}, {"r", r}});
        }
    }
    // ABCDdownIV family: width b+l >= 3 and k >= d+3.
    for (int d = 0; d <= n; ++d) {
        for (int k = d + 3; 3 * k + d <= n; ++k) {
            for (int w = 3; w * k + d <= n; ++w) {
                int b = n - d - w * k;
                if (b < 0 || b >= w) {
                    continue;
                }
                int ell = w - b;
                Partition g(build_parts({{k + 1, b}, {k, ell}, {1, d}}));
                for (int t = d + 2; t <= k - 1; ++t) {
                    int a = b + w * (k - t) + t - 1;
                    Partition m(build_parts({{a, 1}, {t, w - 1}, {d + 1, 1}}));
                    out.add(g, std::move(m), ArrowKind::down_only, TheoremTag::ABCDdownIV,
                            {{"b", b}, {"k", k}, {"l", ell}, {"d", d}, {"t", t}, {"a", a}});
                }
            }
        }
    }
    return out.take();
}

std::vector<PredictedArrow> single_up_arrows(int n) {
    Collector out;
    for (const PredictedArrow& pa : single_down_arrows(n)) {
        TheoremTag tag = pa.sources.front() == TheoremTag::Cdown1 ? TheoremTag::DualCdown1
                                                                  : TheoremTag::DualABCDdownIV;
        Params params = pa.params;
        int kappa = 0;
        for (const auto& [name, value] : pa.params) {
            if (tag == TheoremTag::DualCdown1 && name == "c") {
                kappa = value + 1;
            }
            if (tag == TheoremTag::DualABCDdownIV && (name == "b" || name == "l")) {
                kappa += value;
            }
        }
        params.emplace_back("kappa", kappa);
        out.add(conjugate(pa.m), conjugate(pa.g), ArrowKind::up_only, tag, std::move(params));
    }
    return out.take();
}

std::vector<PredictedArrow> single_up_arrows_direct(int n) {
    if (n < 2) {
        throw std::invalid_argument("single_up_arrows_direct: n must be >= 2");
    }
    Collector out;
    // dual of Cdown1: kappa = c+1
    for (int k = 4; k <= n - 1; ++k) {
        int d = n - k;
        for (int t = 2; t <= k - 2 && 2 * t <= d + 1; ++t) {
            int c = (n - (k - 1)) / t;
            int r = (n - (k - 1)) % t;
            int kappa = c + 1;
            Partition g(build_parts({{kappa + 1, r}, {kappa, t - r}, {1, k - 1 - t}}));
            Partition m(build_parts({{d + 1, 1}, {1, k - 1}}));
            out.add(std::move(g), std::move(m), ArrowKind::up_only, TheoremTag::DualCdown1,
                    {{"k", k}, {"d", d}, {"t", t}, {"c", c}, {"r", r}, {"kappa", kappa}});
        }
    }
    // dual of ABCDdownIV: kappa = b+l
    for (int d = 0; d <= n; ++d) {
        for (int k = d + 3; 3 * k + d <= n; ++k) {
            for (int w = 3; w * k + d <= n; ++w) {
                int b = n - d - w * k;
                if (b < 0 || b >= w) {
                    continue;
                }
                int ell = w - b;
                for (int t = d + 2; t <= k - 1; ++t) {
                    int a = b + w * (k - t) + t - 1;
                    Partition g(build_parts({{w + 1, d + 1}, {w, t - d - 1}, {1, a - t}}));
                    Partition m(build_parts({{w + d, 1}, {w, k - 1}, {b, b > 0 ? 1 : 0}}));
                    out.add(std::move(g), std::move(m), ArrowKind::up_only,
                            TheoremTag::DualABCDdownIV,
                            {{"b", b}, {"k", k}, {"l", ell}, {"d", d}, {"t", t}, {"a", a},
                             {"kappa", w}});
                }
            }
        }
    }
    return out.take();
}

ArrowRelations predicted_arrows(const std::vector<IrreducibleInfo>& ji,
                                const std::vector<IrreducibleInfo>& mi) {
    if (ji.empty() || mi.empty()) {
        throw std::invalid_argument("predicted_arrows: no irreducibles");
    }
    const int n = ji.front().partition.n();
    std::map<Partition, int> gi;
    std::map<Partition, int> ai;
    for (size_t i = 0; i < ji.size(); ++i) {
        gi.emplace(ji[i].partition, static_cast<int>(i));
    }
    for (size_t i = 0; i < mi.size(); ++i) {
        ai.emplace(mi[i].partition, static_cast<int>(i));
    }
    auto locate = [&](const PredictedArrow& pa) {
        auto g = gi.find(pa.g);
        auto m = ai.find(pa.m);
        if (g == gi.end() || m == ai.end()) {
            throw std::logic_error("predicted pair outside the standard context: " +
                                   to_string(pa.g) + " / " + to_string(pa.m));
        }
        return std::make_pair(g->second, m->second);
    };
    ArrowRelations ar;
    for (const PredictedArrow& pa : double_arrows(n)) {
        auto [g, m] = locate(pa);
        ar.dbl.emplace(g, m);
        ar.down.emplace(g, m);
        ar.up.emplace(g, m);
    }
    for (const PredictedArrow& pa : single_down_arrows(n)) {
        ar.down.insert(locate(pa));
    }
    for (const PredictedArrow& pa : single_up_arrows(n)) {
        ar.up.insert(locate(pa));
    }
    return ar;
}

ArrowRelations predicted_arrows(int n) {
    return predicted_arrows(join_irreducibles(n), meet_irreducibles(n));
}

const std::vector<ArrowPattern>& arrow_patterns() {
    static const std::vector<ArrowPattern> patterns = {
        {JoinType::A, ArrowKind::dbl, MeetType::I},
        {JoinType::B, ArrowKind::dbl, MeetType::I},
        {JoinType::A, ArrowKind::dbl, MeetType::II},
        {JoinType::A, ArrowKind::dbl, MeetType::III},
        {JoinType::B, ArrowKind::dbl, MeetType::III},
        {JoinType::C, ArrowKind::dbl, MeetType::I},
        {JoinType::C, ArrowKind::dbl, MeetType::II},
        {JoinType::D, ArrowKind::dbl, MeetType::IV},
        {JoinType::C, ArrowKind::down_only, MeetType::IV},
        {JoinType::A, ArrowKind::down_only, MeetType::IV},
        {JoinType::B, ArrowKind::down_only, MeetType::IV},
        {JoinType::D, ArrowKind::down_only, MeetType::IV},
        {JoinType::D, ArrowKind::up_only, MeetType::III},
        {JoinType::D, ArrowKind::up_only, MeetType::I},
        {JoinType::D, ArrowKind::up_only, MeetType::II},
        {JoinType::D, ArrowKind::up_only, MeetType::IV},
    };
    return patterns;
}

std::vector<FirstOccurrenceRow> first_occurrence_report(int max_n) {
    if (max_n < 13) {
        throw std::invalid_argument("first_occurrence_report: max_n must be >= 13");
    }
    const auto& patterns = arrow_patterns();
    std::vector<FirstOccurrenceRow> rows(patterns.size());
    for (size_t i = 0; i < patterns.size(); ++i) {
        rows[i].pattern = patterns[i];
    }
    size_t found = 0;
    for (int n = 2; n <= max_n && found < patterns.size(); ++n) {
        std::vector<PredictedArrow> all = double_arrows(n);
        auto downs = single_down_arrows(n);
        auto ups = single_up_arrows(n);
        all.insert(all.end(), downs.begin(), downs.end());
        all.insert(all.end(), ups.begin(), ups.end());
        for (const PredictedArrow& pa : all) {
            auto jt = classify_join_type(pa.g);
            auto mt = classify_meet_type(pa.m);
            if (!jt || !mt) {
                throw std::logic_error("predicted arrow endpoint is not irreducible");
            }
            ArrowPattern pat{jt->first, pa.kind, mt->first};
            for (size_t i = 0; i < patterns.size(); ++i) {
                if (patterns[i] != pat) {
                    continue;
                }
                auto& row = rows[i];
                if (row.first_n == 0) {
                    row.first_n = n;
                    row.g = pa.g;
                    row.m = pa.m;
                    ++found;
                } else if (row.first_n == n &&
                           std::tie(pa.g, pa.m) > std::tie(row.g, row.m)) {
                    // descending-lex-first witness on g, then m
                    row.g = pa.g;
                    row.m = pa.m;
                }
            }
        }
    }
    return rows;
}

} // namespace domlat
