#include "rleclcs/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rleclcs::oracle {

DpTable naive_lcs(std::string_view a, std::string_view b) {
    DpTable t(a.size(), b.size());
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            t(i, j) = a[i - 1] == b[j - 1] ? t(i - 1, j - 1) + 1 : std::max(t(i - 1, j), t(i, j - 1));
        }
    }
    return t;
}

DpTable naive_suffix_lcs(std::string_view a, std::string_view b) {
    // One extra row/column so that index M+1 / N+1 is the empty-suffix sentinel.
    DpTable t(a.size() + 1, b.size() + 1);
    for (std::size_t i = a.size(); i >= 1; --i) {
        for (std::size_t j = b.size(); j >= 1; --j) {
            t(i, j) = a[i - 1] == b[j - 1] ? t(i + 1, j + 1) + 1 : std::max(t(i + 1, j), t(i, j + 1));
        }
    }
    return t;
}

bool is_subsequence(std::string_view x, std::string_view y) {
    std::size_t k = 0;
    for (char ch : y) {
        if (k < x.size() && x[k] == ch) ++k;
    }
    return k == x.size();
}

bool contains_substring(std::string_view x, std::string_view c) {
    return x.find(c) != std::string_view::npos;
}

std::vector<CInterval> naive_minimal_intervals(std::string_view a, std::string_view c) {
    std::vector<CInterval> out;
    if (c.empty()) return out;
    for (std::size_t s = 1; s <= a.size(); ++s) {
        for (std::size_t f = s; f <= a.size(); ++f) {
            if (!is_subsequence(c, a.substr(s - 1, f - s + 1))) continue;
            const bool shrink_left = is_subsequence(c, a.substr(s, f - s));
            const bool shrink_right = is_subsequence(c, a.substr(s - 1, f - s));
            if (!shrink_left && !shrink_right) out.push_back({s, f});
        }
    }
    return out;
}

std::vector<CInterval> scan_minimal_intervals(std::string_view a, std::string_view c) {
    std::vector<CInterval> out;
    if (c.empty()) return out;
    const std::size_t big_m = a.size();
    // right_end[s] = smallest f with c a subsequence of a[s..f], or 0.
    std::vector<std::size_t> right_end(big_m + 2, 0);
    for (std::size_t s = 1; s <= big_m; ++s) {
        std::size_t k = 0;
        for (std::size_t f = s; f <= big_m; ++f) {
            if (a[f - 1] == c[k] && ++k == c.size()) {
                right_end[s] = f;
                break;
            }
        }
    }
    for (std::size_t s = 1; s <= big_m; ++s) {
        if (right_end[s] == 0) continue;
        if (right_end[s + 1] == 0 || right_end[s + 1] > right_end[s]) out.push_back({s, right_end[s]});
    }
    return out;
}

std::optional<std::size_t> deorowicz_str_ic_lcs(std::string_view a, std::string_view b, std::string_view c) {
    const DpTable pre = naive_lcs(a, b);
    if (c.empty()) return pre(a.size(), b.size());

    const auto in_a = scan_minimal_intervals(a, c);
    const auto in_b = scan_minimal_intervals(b, c);
    if (in_a.empty() || in_b.empty()) return std::nullopt;

    const DpTable suf = naive_suffix_lcs(a, b);
    std::size_t best = 0;
    for (const CInterval& x : in_a) {
        for (const CInterval& y : in_b) {
            best = std::max<std::size_t>(best, pre(x.start - 1, y.start - 1) + suf(x.end + 1, y.end + 1));
        }
    }
    return best + c.size();
}

std::optional<std::size_t> exhaustive_str_ic_lcs(std::string_view a, std::string_view b, std::string_view c) {
    if (a.size() > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive search supports |a| <= " + std::to_string(kExhaustiveLimit) +
                                    ", got " + std::to_string(a.size()));
    }
    std::optional<std::size_t> best;
    std::string z;
    for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
        z.clear();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (mask & (std::size_t{1} << i)) z.push_back(a[i]);
        }
        if (best && z.size() <= *best) continue;
        if (contains_substring(z, c) && is_subsequence(z, b)) best = z.size();
    }
    return best;
}

}  // namespace rleclcs::oracle
