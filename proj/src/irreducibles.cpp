#include "domlat/irreducibles.hpp"

#include <algorithm>
#include <stdexcept>

#include "domlat/lattice.hpp"

namespace domlat {

std::string to_string(JoinType t) {
    switch (t) {
        case JoinType::A: return "A";
        case JoinType::B: return "B";
        case JoinType::C: return "C";
        case JoinType::D: return "D";
    }
    return "?";
}

std::string to_string(MeetType t) {
    switch (t) {
        case MeetType::I: return "I";
        case MeetType::II: return "II";
        case MeetType::III: return "III";
        case MeetType::IV: return "IV";
    }
    return "?";
}

MeetType dual_type(JoinType t) { return static_cast<MeetType>(static_cast<int>(t)); }
JoinType dual_type(MeetType t) { return static_cast<JoinType>(static_cast<int>(t)); }

std::string IrreducibleInfo::type_name() const {
    return kind == IrreducibleKind::join ? to_string(join_type()) : to_string(meet_type());
}

namespace {

std::vector<int> repeat(int value, int count) {
    return std::vector<int>(static_cast<size_t>(std::max(count, 0)), value);
}

void append(std::vector<int>& out, int value, int count) {
    for (int i = 0; i < count; ++i) {
        out.push_back(value);
    }
}

} // namespace

Partition join_template(JoinType t, const IrreducibleParams& p) {
    std::vector<int> parts;
    switch (t) {
        case JoinType::A:
            parts = repeat(p.k, p.ell);
            break;
        case JoinType::B:
            append(parts, p.k, p.b);
            append(parts, p.k - 1, p.ell);
            break;
        case JoinType::C:
            parts.push_back(p.k);
            append(parts, 1, p.d);
            break;
        case JoinType::D:
            append(parts, p.k + 1, p.b);
            append(parts, p.k, p.ell);
            append(parts, 1, p.d);
            break;
    }
    return Partition(std::move(parts));
}

Partition meet_template(MeetType t, const IrreducibleParams& p) {
    std::vector<int> parts;
    switch (t) {
        case MeetType::I:
            parts = repeat(p.t, p.c);
            break;
        case MeetType::II:
            append(parts, p.t, p.c);
            parts.push_back(p.r);
            break;
        case MeetType::III:
            parts.push_back(p.a);
            append(parts, 1, p.c);
            break;
        case MeetType::IV:
            parts.push_back(p.a);
            append(parts, p.t, p.c);
            if (p.r > 0) {
                parts.push_back(p.r);
            }
            break;
    }
    return Partition(std::move(parts));
}

std::optional<std::pair<JoinType, IrreducibleParams>> classify_join_type(const Partition& p) {
    std::vector<std::pair<JoinType, IrreducibleParams>> matches;
    const auto& v = p.parts();
    const int len = p.length();
    if (len >= 1) {
        int first = v.front();
        int last = v.back();
        bool constant = first == last;
        if (constant && first >= 2) {
            IrreducibleParams q;
            q.k = first;
            q.ell = len;
            matches.emplace_back(JoinType::A, q);
        }
        int count_first = static_cast<int>(std::count(v.begin(), v.end(), first));
        int count_last = static_cast<int>(std::count(v.begin(), v.end(), last));
        if (!constant && count_first + count_last == len && first == last + 1 && last >= 1) {
            IrreducibleParams q;
            q.k = first;
            q.b = count_first;
            q.ell = count_last;
            matches.emplace_back(JoinType::B, q);
        }
        if (len >= 2 && first >= 3 && v[1] == 1) {
            IrreducibleParams q;
            q.k = first;
            q.d = len - 1;
            matches.emplace_back(JoinType::C, q);
        }
        if (!constant && last == 1) {
            // strip the ones, the head must be (k+1,..,k+1,k,..,k) with k >= 3
            int d = count_last;
            int head = len - d;
            if (head >= 2) {
                int k = v[static_cast<size_t>(head) - 1];
                int b = 0;
                int ell = 0;
                bool ok = k >= 3;
                for (int i = 0; ok && i < head; ++i) {
                    if (v[static_cast<size_t>(i)] == k + 1) {
                        ++b;
                    } else if (v[static_cast<size_t>(i)] == k) {
                        ++ell;
                    } else {
                        ok = false;
                    }
                }
                if (ok && ell >= 1) {
                    IrreducibleParams q;
                    q.k = k;
                    q.b = b;
                    q.ell = ell;
                    q.d = d;
                    matches.emplace_back(JoinType::D, q);
                }
            }
        }
    }
    if (matches.size() > 1) {
        throw std::logic_error("classify_join_type: templates overlap on " + to_string(p));
    }
    if (matches.empty()) {
        return std::nullopt;
    }
    return matches.front();
}

std::optional<std::pair<MeetType, IrreducibleParams>> classify_meet_type(const Partition& p) {
    std::vector<std::pair<MeetType, IrreducibleParams>> matches;
    const auto& v = p.parts();
    const int len = p.length();
    if (len >= 2) {
        int first = v.front();
        int last = v.back();
        if (first == last) {
            IrreducibleParams q;
            q.t = first;
            q.c = len;
            matches.emplace_back(MeetType::I, q);
        }
        if (first > last && v[static_cast<size_t>(len) - 2] == first) {
            IrreducibleParams q;
            q.t = first;
            q.c = len - 1;
            q.r = last;
            matches.emplace_back(MeetType::II, q);
        }
        if (len >= 3 && first >= 2 && v[1] == 1) {
            IrreducibleParams q;
            q.a = first;
            q.c = len - 1;
            matches.emplace_back(MeetType::III, q);
        }
        if (len >= 3 && v[1] >= 2 && first > v[1]) {
            int t = v[1];
            int run = 1;
            while (run + 1 < len && v[static_cast<size_t>(run) + 1] == t) {
                ++run;
            }
            int rest = len - 1 - run;
            int r = rest == 0 ? 0 : last;
            if (run >= 2 && rest <= 1 && (rest == 0 || last < t)) {
                IrreducibleParams q;
                q.a = first;
                q.t = t;
                q.c = run;
                q.r = r;
                matches.emplace_back(MeetType::IV, q);
            }
        }
    }
    if (matches.size() > 1) {
        throw std::logic_error("classify_meet_type: templates overlap on " + to_string(p));
    }
    if (matches.empty()) {
        return std::nullopt;
    }
    return matches.front();
}

namespace {

Partition unique_lower_cover(const Partition& p) {
    auto covers = lower_covers(p);
    if (covers.size() != 1) {
        throw std::logic_error("expected a unique lower cover for " + to_string(p));
    }
    return covers.front();
}

Partition unique_upper_cover(const Partition& p) {
    auto covers = upper_covers(p);
    if (covers.size() != 1) {
        throw std::logic_error("expected a unique upper cover for " + to_string(p));
    }
    return covers.front();
}

IrreducibleInfo make_join_info(JoinType t, const IrreducibleParams& q) {
    IrreducibleInfo info;
    info.partition = join_template(t, q);
    info.kind = IrreducibleKind::join;
    info.type = static_cast<int>(t);
    info.params = q;
    info.unique_cover = unique_lower_cover(info.partition);
    return info;
}

IrreducibleInfo make_meet_info(MeetType t, const IrreducibleParams& q) {
    IrreducibleInfo info;
    info.partition = meet_template(t, q);
    info.kind = IrreducibleKind::meet;
    info.type = static_cast<int>(t);
    info.params = q;
    info.unique_cover = unique_upper_cover(info.partition);
    return info;
}

} // namespace

std::vector<IrreducibleInfo> join_irreducibles(int n) {
    if (n < 1) {
        throw std::invalid_argument("join_irreducibles: n must be >= 1");
    }
    std::vector<IrreducibleInfo> out;
    IrreducibleParams q;
    // A: l*k = n, k >= 2
    for (int ell = 1; ell <= n; ++ell) {
        if (n % ell == 0 && n / ell >= 2) {
            q = {};
            q.k = n / ell;
            q.ell = ell;
            out.push_back(make_join_info(JoinType::A, q));
        }
    }
    // B: b*k + l*(k-1) = n, k >= 2, b,l >= 1
    for (int k = 2; k <= n; ++k) {
        for (int b = 1; b * k + (k - 1) <= n; ++b) {
            int rem = n - b * k;
            if (rem % (k - 1) == 0) {
                q = {};
                q.k = k;
                q.b = b;
                q.ell = rem / (k - 1);
                out.push_back(make_join_info(JoinType::B, q));
            }
        }
    }
    // C: k + d = n, k >= 3, d >= 1
    for (int k = 3; k <= n - 1; ++k) {
        q = {};
        q.k = k;
        q.d = n - k;
        out.push_back(make_join_info(JoinType::C, q));
    }
    // D: b*(k+1) + l*k + d = n, k >= 3, l >= 1, d >= 1, b+l >= 2
    for (int k = 3; k <= n; ++k) {
        for (int w = 2; w * k + 1 <= n; ++w) {
            for (int b = 0; b < w; ++b) {
                int d = n - w * k - b;
                if (d >= 1) {
                    q = {};
                    q.k = k;
                    q.b = b;
                    q.ell = w - b;
                    q.d = d;
                    out.push_back(make_join_info(JoinType::D, q));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleInfo& x, const IrreducibleInfo& y) {
        return x.partition > y.partition;
    });
    return out;
}

std::vector<IrreducibleInfo> meet_irreducibles(int n) {
    if (n < 1) {
        throw std::invalid_argument("meet_irreducibles: n must be >= 1");
    }
    std::vector<IrreducibleInfo> out;
    IrreducibleParams q;
    // I: t*c = n, t >= 1, c >= 2
    for (int c = 2; c <= n; ++c) {
        if (n % c == 0) {
            q = {};
            q.t = n / c;
            q.c = c;
            out.push_back(make_meet_info(MeetType::I, q));
        }
    }
    // II: c*t + r = n, t > r >= 1, c >= 1
    for (int t = 2; t <= n; ++t) {
        for (int c = 1; c * t < n; ++c) {
            int r = n - c * t;
            if (r >= 1 && r < t) {
                q = {};
                q.t = t;
                q.c = c;
                q.r = r;
                out.push_back(make_meet_info(MeetType::II, q));
            }
        }
    }
    // III: a + c = n, a >= 2, c >= 2
    for (int a = 2; a <= n - 2; ++a) {
        q = {};
        q.a = a;
        q.c = n - a;
        out.push_back(make_meet_info(MeetType::III, q));
    }
    // IV: a + c*t + r = n, a > t > r >= 0, t >= 2, c >= 2
    for (int t = 2; t <= n; ++t) {
        for (int c = 2; c * t + t + 1 <= n; ++c) {
            for (int r = 0; r < t; ++r) {
                int a = n - c * t - r;
                if (a > t) {
                    q = {};
                    q.a = a;
                    q.t = t;
                    q.c = c;
                    q.r = r;
                    out.push_back(make_meet_info(MeetType::IV, q));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleInfo& x, const IrreducibleInfo& y) {
        return x.partition > y.partition;
    });
    return out;
}

} // namespace domlat
