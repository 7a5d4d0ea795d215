#include "rleclcs/rle_string.hpp"

#include <charconv>

namespace rleclcs {

RleString::RleString(std::vector<Run> runs) : runs_(std::move(runs)) {
    prefix_sums_.reserve(runs_.size() + 1);
    prefix_sums_.push_back(0);
    for (std::size_t p = 0; p < runs_.size(); ++p) {
        if (runs_[p].length == 0) {
            throw std::invalid_argument("run " + std::to_string(p + 1) + " has length 0");
        }
        if (p > 0 && runs_[p].symbol == runs_[p - 1].symbol) {
            throw std::invalid_argument("runs " + std::to_string(p) + " and " +
                                        std::to_string(p + 1) + " share a symbol");
        }
        prefix_sums_.push_back(prefix_sums_.back() + runs_[p].length);
    }
    run_index_.reserve(size() + 1);
    run_index_.push_back(0);
    for (std::size_t p = 0; p < runs_.size(); ++p) {
        run_index_.insert(run_index_.end(), runs_[p].length, p + 1);
    }
}

RleString RleString::encode(std::string_view text) {
    std::vector<Run> runs;
    for (char ch : text) {
        if (!runs.empty() && runs.back().symbol == ch) {
            ++runs.back().length;
        } else {
            runs.push_back({ch, 1});
        }
    }
    return RleString(std::move(runs));
}

std::string RleString::decode() const {
    std::string out;
    out.reserve(size());
    for (const Run& r : runs_) out.append(r.length, r.symbol);
    return out;
}

RleString RleString::reversed() const {
    return RleString(std::vector<Run>(runs_.rbegin(), runs_.rend()));
}

std::string RleString::to_text() const {
    std::string out;
    for (const Run& r : runs_) {
        out.push_back(r.symbol);
        out += std::to_string(r.length);
    }
    return out;
}

RleString RleString::parse(std::string_view text) {
    std::vector<Run> runs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char symbol = text[pos++];
        const std::size_t digits_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits_begin) {
            throw ParseError("missing exponent after symbol at offset " +
                             std::to_string(digits_begin - 1));
        }
        std::size_t length = 0;
        const auto [end, ec] = std::from_chars(text.data() + digits_begin, text.data() + pos, length);
        if (ec != std::errc{} || end != text.data() + pos) {
            throw ParseError("exponent out of range at offset " + std::to_string(digits_begin));
        }
        if (length == 0) {
            throw ParseError("zero exponent at offset " + std::to_string(digits_begin));
        }
        if (!runs.empty() && runs.back().symbol == symbol) {
            throw ParseError("adjacent runs share a symbol at offset " +
                             std::to_string(digits_begin - 1));
        }
        runs.push_back({symbol, length});
    }
    return RleString(std::move(runs));
}

RleBuilder& RleBuilder::append(char symbol, std::size_t length) {
    if (length == 0) return *this;
    if (!runs_.empty() && runs_.back().symbol == symbol) {
        runs_.back().length += length;
    } else {
        runs_.push_back({symbol, length});
    }
    return *this;
}

RleBuilder& RleBuilder::append(const RleString& s) {
    for (const Run& r : s.runs()) append(r.symbol, r.length);
    return *this;
}

}  // namespace rleclcs
