#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rleclcs/rle_string.hpp"

namespace rleclcs {

/// Three strings A, B and the constraint C.
struct Instance {
    RleString a;
    RleString b;
    RleString c;
};

/// `raw:<literal>` or `rle:<runs>`. Throws ParseError.
RleString parse_record(std::string_view record);

/// Line-oriented instance: three records A, B, C; `#` lines and blank lines skipped.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

/// Writes the instance as three `raw:` records.
void write_instance(std::ostream& out, const Instance& inst);

}  // namespace rleclcs
