#include "domlat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "domlat/closure.hpp"
#include "domlat/context.hpp"
#include "domlat/theorems.hpp"

namespace domlat {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("DOMLAT_THREADS")) {
        int value = std::atoi(env);
        if (value > 0) {
            return value;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

VerifyResult verify_single(int n, const VerifyOptions& options) {
    VerifyResult result;
    result.n = n;
    auto ji = join_irreducibles(n);
    auto mi = meet_irreducibles(n);
    FormalContext ctx = standard_context(n, ji, mi);
    ArrowRelations covers = arrows_via_covers(ji, mi);
    ArrowRelations theorems = predicted_arrows(ji, mi);

    std::ostringstream line;
    bool pass = true;
    auto record = [&](const std::string& label, bool ok) {
        line << " " << label << "=" << (ok ? "ok" : "FAIL");
        pass = pass && ok;
    };

    int doubles = static_cast<int>(covers.dbl.size());
    int down_only = static_cast<int>(covers.down.size()) - doubles;
    int up_only = static_cast<int>(covers.up.size()) - doubles;
    line << "n=" << n << " doubles=" << doubles << " down_only=" << down_only
         << " up_only=" << up_only;

    if (n <= options.bf_cap) {
        ArrowRelations brute = arrows_bruteforce(ctx);
        record("covers==bruteforce", covers == brute);
        record("theorems==bruteforce", theorems == brute);
    } else {
        record("covers==theorems", covers == theorems);
    }

    if (n >= 3) {
        int count = 0;
        for (const Subcontext& sub : all_one_generated_closures(ctx, covers)) {
            if (sub.is_1x1()) {
                ++count;
            }
        }
        line << " 1x1_closures=" << count << " expected=" << (2 * n - 4);
        record("1x1", count == 2 * n - 4);
    }

    // classify every irreducible once
    std::vector<JoinType> gtype(ji.size());
    std::vector<MeetType> mtype(mi.size());
    for (size_t i = 0; i < ji.size(); ++i) {
        auto c = classify_join_type(ji[i].partition);
        if (!c) {
            throw std::logic_error("join-irreducible fails classification");
        }
        gtype[i] = c->first;
    }
    for (size_t i = 0; i < mi.size(); ++i) {
        auto c = classify_meet_type(mi[i].partition);
        if (!c) {
            throw std::logic_error("meet-irreducible fails classification");
        }
        mtype[i] = c->first;
    }

    // double-arrow bijection between types A/B/C and I/II/III
    std::map<int, int> partners_of_g;
    std::map<int, int> partners_of_m;
    bool segregation = true;
    for (const auto& [g, m] : covers.dbl) {
        bool gd = gtype[static_cast<size_t>(g)] == JoinType::D;
        bool m4 = mtype[static_cast<size_t>(m)] == MeetType::IV;
        segregation = segregation && gd == m4;
        if (!gd) {
            ++partners_of_g[g];
        }
        if (!m4) {
            ++partners_of_m[m];
        }
    }
    bool bijection = true;
    for (size_t g = 0; g < ji.size(); ++g) {
        if (gtype[g] != JoinType::D && partners_of_g[static_cast<int>(g)] != 1) {
            bijection = false;
        }
    }
    for (size_t m = 0; m < mi.size(); ++m) {
        if (mtype[m] != MeetType::IV && partners_of_m[static_cast<int>(m)] != 1) {
            bijection = false;
        }
    }
    record("bijection", bijection);

    // single downs end in IV, single ups start in D
    for (const auto& [g, m] : covers.down) {
        if (!covers.dbl.count({g, m})) {
            segregation = segregation && mtype[static_cast<size_t>(m)] == MeetType::IV;
        }
    }
    for (const auto& [g, m] : covers.up) {
        if (!covers.dbl.count({g, m})) {
            segregation = segregation && gtype[static_cast<size_t>(g)] == JoinType::D;
        }
    }
    record("segregation", segregation);

    bool forbidden_ok = true;
    auto check_forbidden = [&](const std::set<std::pair<int, int>>& rel) {
        for (const auto& [g, m] : rel) {
            JoinType jt = gtype[static_cast<size_t>(g)];
            MeetType mt = mtype[static_cast<size_t>(m)];
            if ((jt == JoinType::B && mt == MeetType::II) ||
                (jt == JoinType::C && mt == MeetType::III)) {
                forbidden_ok = false;
            }
        }
    };
    check_forbidden(covers.down);
    check_forbidden(covers.up);
    record("forbidden", forbidden_ok);

    line << " " << (pass ? "PASS" : "FAIL");
    result.pass = pass;
    result.line = line.str();
    return result;
}

std::vector<VerifyResult> verify_range(int lo, int hi, const VerifyOptions& options) {
    if (lo < 2 || hi < lo) {
        throw std::invalid_argument("verify: range must satisfy 2 <= lo <= hi");
    }
    const int jobs = hi - lo + 1;
    std::vector<VerifyResult> results(static_cast<size_t>(jobs));
    int workers = std::min(resolve_threads(options.threads), jobs);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= jobs || failed.load()) {
                return;
            }
            try {
                results[static_cast<size_t>(idx)] = verify_single(lo + idx, options);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (first_error.empty()) {
                    first_error = ex.what();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failed.load()) {
        throw std::runtime_error("verify: " + first_error);
    }
    return results;
}

} // namespace domlat
