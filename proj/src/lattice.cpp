#include "domlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace domlat {

std::uint64_t partition_count(int n) {
    if (n < 0) {
        return 0;
    }
    // p(m) = sum_{k>=1} (-1)^{k-1} (p(m - k(3k-1)/2) + p(m - k(3k+1)/2))
    std::vector<std::uint64_t> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) {
                break;
            }
            std::uint64_t term = 0;
            if (g1 <= m) {
                term += p[static_cast<size_t>(m - g1)];
            }
            if (g2 <= m) {
                term += p[static_cast<size_t>(m - g2)];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[static_cast<size_t>(m)] = acc;
    }
    return p[static_cast<size_t>(n)];
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(make_partition(prefix));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        enumerate_rec(remaining - k, k, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) {
        throw std::invalid_argument("for_each_partition: negative n");
    }
    std::vector<int> prefix;
    enumerate_rec(n, n, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
    if (n < 0 || n > cap) {
        throw std::invalid_argument("enumerate_partitions: n=" + std::to_string(n) +
                                    " outside [0, " + std::to_string(cap) + "]");
    }
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(partition_count(n)));
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> lower_covers(const Partition& p) {
    std::vector<Partition> out;
    const int len = p.length();
    for (int j = 1; j <= len; ++j) {
        int pj = p.part(j);
        int pj1 = p.part(j + 1);
        if (pj - pj1 >= 2) {
            // cliff at j: the brick falls one row down
            std::vector<int> q(p.parts());
            q[static_cast<size_t>(j) - 1] -= 1;
            if (j == len) {
                q.push_back(1);
            } else {
                q[static_cast<size_t>(j)] += 1;
            }
            out.push_back(Partition(std::move(q)));
        } else if (pj1 == pj - 1 && pj >= 2) {
            // candidate slippery step at j: find the run of value pj-1
            int end = j + 1;
            while (p.part(end + 1) == pj - 1) {
                ++end;
            }
            int l = end - j + 1; // brick would land at position j+l
            if (l >= 2 && p.part(j + l) == pj - 2) {
                std::vector<int> q(p.parts());
                q[static_cast<size_t>(j) - 1] -= 1;
                if (j + l > len) {
                    q.push_back(1);
                } else {
                    q[static_cast<size_t>(j + l) - 1] += 1;
                }
                out.push_back(Partition(std::move(q)));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> upper_covers(const Partition& p) {
    std::vector<Partition> out;
    for (const Partition& q : lower_covers(conjugate(p))) {
        out.push_back(conjugate(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition meet(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("meet: partitions of different integers");
    }
    int len = std::max(a.length(), b.length());
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(len));
    long long sa = 0;
    long long sb = 0;
    long long prev = 0;
    for (int j = 1; j <= len; ++j) {
        sa += a.part(j);
        sb += b.part(j);
        long long cur = std::min(sa, sb);
        parts.push_back(static_cast<int>(cur - prev));
        prev = cur;
    }
    return Partition(std::move(parts));
}

Partition join(const Partition& a, const Partition& b) {
    return conjugate(meet(conjugate(a), conjugate(b)));
}

PartitionLattice PartitionLattice::build(int n, int cap) {
    if (n < 0 || n > cap) {
        throw std::invalid_argument("PartitionLattice: n=" + std::to_string(n) +
                                    " outside [0, " + std::to_string(cap) + "]");
    }
    PartitionLattice lat;
    lat.n = n;
    lat.elements = enumerate_partitions(n, cap);
    std::sort(lat.elements.begin(), lat.elements.end(), std::greater<>{});
    std::map<Partition, int> index;
    for (size_t i = 0; i < lat.elements.size(); ++i) {
        index.emplace(lat.elements[i], static_cast<int>(i));
    }
    lat.lower_cover_adjacency.assign(lat.elements.size(), {});
    lat.upper_cover_adjacency.assign(lat.elements.size(), {});
    for (size_t i = 0; i < lat.elements.size(); ++i) {
        for (const Partition& q : lower_covers(lat.elements[i])) {
            int j = index.at(q);
            lat.lower_cover_adjacency[i].push_back(j);
            lat.upper_cover_adjacency[static_cast<size_t>(j)].push_back(static_cast<int>(i));
        }
    }
    for (auto& v : lat.lower_cover_adjacency) {
        std::sort(v.begin(), v.end());
    }
    for (auto& v : lat.upper_cover_adjacency) {
        std::sort(v.begin(), v.end());
    }
    return lat;
}

int PartitionLattice::index_of(const Partition& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p, std::greater<>{});
    if (it == elements.end() || *it != p) {
        throw std::invalid_argument("PartitionLattice: unknown partition " + to_string(p));
    }
    return static_cast<int>(it - elements.begin());
}

} // namespace domlat
