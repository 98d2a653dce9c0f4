#include "domlat/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace domlat {

BitRows BitRows::transposed() const {
    BitRows out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                out.set(c, r);
            }
        }
    }
    return out;
}

namespace {

int index_in_desc(const std::vector<Partition>& list, const Partition& p, const char* what) {
    auto it = std::lower_bound(list.begin(), list.end(), p, std::greater<>{});
    if (it == list.end() || *it != p) {
        throw std::invalid_argument(std::string(what) + ": unknown partition " + to_string(p));
    }
    return static_cast<int>(it - list.begin());
}

} // namespace

int FormalContext::object_index(const Partition& g) const {
    return index_in_desc(objects, g, "object_index");
}

int FormalContext::attribute_index(const Partition& m) const {
    return index_in_desc(attributes, m, "attribute_index");
}

FormalContext standard_context(int n, const std::vector<IrreducibleInfo>& ji,
                               const std::vector<IrreducibleInfo>& mi) {
    if (n < 2) {
        throw std::invalid_argument("standard_context: n must be >= 2 (no irreducibles below)");
    }
    FormalContext ctx;
    ctx.objects.reserve(ji.size());
    ctx.attributes.reserve(mi.size());
    for (const auto& info : ji) {
        ctx.objects.push_back(info.partition);
    }
    for (const auto& info : mi) {
        ctx.attributes.push_back(info.partition);
    }
    ctx.incidence = BitRows(static_cast<int>(ctx.objects.size()),
                            static_cast<int>(ctx.attributes.size()));
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
            if (dominance_leq(ctx.objects[static_cast<size_t>(g)],
                              ctx.attributes[static_cast<size_t>(m)])) {
                ctx.incidence.set(g, m);
            }
        }
    }
    return ctx;
}

FormalContext standard_context(int n) {
    return standard_context(n, join_irreducibles(n), meet_irreducibles(n));
}

std::vector<int> object_intent(const FormalContext& ctx, int g) {
    if (g < 0 || g >= static_cast<int>(ctx.objects.size())) {
        throw std::out_of_range("object_intent: index out of range");
    }
    std::vector<int> out;
    for (int m = 0; m < static_cast<int>(ctx.attributes.size()); ++m) {
        if (ctx.incident(g, m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<int> attribute_extent(const FormalContext& ctx, int m) {
    if (m < 0 || m >= static_cast<int>(ctx.attributes.size())) {
        throw std::out_of_range("attribute_extent: index out of range");
    }
    std::vector<int> out;
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        if (ctx.incident(g, m)) {
            out.push_back(g);
        }
    }
    return out;
}

bool check_clarified_reduced(const FormalContext& ctx) {
    const int ng = static_cast<int>(ctx.objects.size());
    const int nm = static_cast<int>(ctx.attributes.size());
    for (int g = 0; g < ng; ++g) {
        for (int h = g + 1; h < ng; ++h) {
            if (ctx.incidence.row_equal(g, h)) {
                return false;
            }
        }
    }
    BitRows cols = ctx.incidence.transposed();
    for (int m = 0; m < nm; ++m) {
        for (int a = m + 1; a < nm; ++a) {
            if (cols.row_equal(m, a)) {
                return false;
            }
        }
    }
    return true;
}

ArrowRelations arrows_bruteforce(const FormalContext& ctx) {
    const int ng = static_cast<int>(ctx.objects.size());
    const int nm = static_cast<int>(ctx.attributes.size());
    const BitRows& rows = ctx.incidence;
    BitRows cols = rows.transposed();
    ArrowRelations ar;
    for (int g = 0; g < ng; ++g) {
        for (int m = 0; m < nm; ++m) {
            if (rows.get(g, m)) {
                continue;
            }
            // down: every strictly larger object intent contains m
            bool down = true;
            for (int h = 0; down && h < ng; ++h) {
                if (h != g && rows.row_subset(g, h) && !rows.row_equal(g, h) && !rows.get(h, m)) {
                    down = false;
                }
            }
            // up: every strictly larger attribute extent contains g
            bool up = true;
            for (int a = 0; up && a < nm; ++a) {
                if (a != m && cols.row_subset(m, a) && !cols.row_equal(m, a) && !cols.get(a, g)) {
                    up = false;
                }
            }
            if (down) {
                ar.down.emplace(g, m);
            }
            if (up) {
                ar.up.emplace(g, m);
            }
            if (down && up) {
                ar.dbl.emplace(g, m);
            }
        }
    }
    return ar;
}

ArrowRelations arrows_via_covers(const std::vector<IrreducibleInfo>& ji,
                                 const std::vector<IrreducibleInfo>& mi) {
    ArrowRelations ar;
    for (int g = 0; g < static_cast<int>(ji.size()); ++g) {
        const Partition& gp = ji[static_cast<size_t>(g)].partition;
        const Partition& glow = ji[static_cast<size_t>(g)].unique_cover;
        for (int m = 0; m < static_cast<int>(mi.size()); ++m) {
            const Partition& mp = mi[static_cast<size_t>(m)].partition;
            const Partition& mup = mi[static_cast<size_t>(m)].unique_cover;
            if (dominance_leq(gp, mp)) {
                continue;
            }
            bool down = dominance_leq(glow, mp);
            bool up = dominance_leq(gp, mup);
            if (down) {
                ar.down.emplace(g, m);
            }
            if (up) {
                ar.up.emplace(g, m);
            }
            if (down && up) {
                ar.dbl.emplace(g, m);
            }
        }
    }
    return ar;
}

ArrowRelations arrows_via_covers(int n) {
    return arrows_via_covers(join_irreducibles(n), meet_irreducibles(n));
}

} // namespace domlat
