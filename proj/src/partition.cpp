#include "domlat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace domlat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    long long sum = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition: zero before a positive entry");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw std::invalid_argument("partition: parts must be non-increasing");
        }
        sum += parts_[i];
    }
    if (sum > static_cast<long long>(std::numeric_limits<int>::max())) {
        throw std::invalid_argument("partition: sum does not fit int");
    }
    n_ = static_cast<int>(sum);
}

Partition make_partition(std::span<const int> parts) {
    return Partition(std::vector<int>(parts.begin(), parts.end()));
}

Partition make_partition(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<size_t>(p.height()), 0);
    // part i of the conjugate counts original parts >= i
    for (int v : p.parts()) {
        for (int i = 0; i < v; ++i) {
            ++out[static_cast<size_t>(i)];
        }
    }
    return Partition(std::move(out));
}

std::vector<long long> prefix_sums(const Partition& p, int upto) {
    if (upto < 1) {
        throw std::invalid_argument("prefix_sums: upto must be >= 1");
    }
    std::vector<long long> sums(static_cast<size_t>(upto), 0);
    long long acc = 0;
    for (int j = 1; j <= upto; ++j) {
        acc += p.part(j);
        sums[static_cast<size_t>(j) - 1] = acc;
    }
    return sums;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("dominance_leq: partitions of different integers");
    }
    // Prefix sums of a saturate at n from index length(a) on, so if the
    // comparison fails anywhere it already fails at some j <= length(a).
    long long sa = 0;
    long long sb = 0;
    for (int j = 1; j <= a.length(); ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa > sb) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Partition& p) {
    if (p.empty()) {
        return "0";
    }
    std::string out;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text == "0") {
        return Partition{};
    }
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument("parse_partition: bad token in '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace domlat
