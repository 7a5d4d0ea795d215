#include "rleclcs/instance.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace rleclcs {

RleString parse_record(std::string_view record) {
    if (record.starts_with("raw:")) return RleString::encode(record.substr(4));
    if (record.starts_with("rle:")) return RleString::parse(record.substr(4));
    throw ParseError("record must start with raw: or rle:, got '" + std::string(record.substr(0, 16)) + "'");
}

Instance read_instance(std::istream& in) {
    std::array<RleString, 3> records;
    std::size_t count = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (count == records.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": more than three records");
        }
        try {
            records[count++] = parse_record(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (count != records.size()) {
        throw ParseError("expected three records (A, B, C), found " + std::to_string(count));
    }
    return {std::move(records[0]), std::move(records[1]), std::move(records[2])};
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "raw:" << inst.a.decode() << '\n' << "raw:" << inst.b.decode() << '\n' << "raw:" << inst.c.decode() << '\n';
}

}  // namespace rleclcs
