#pragma once

#include <iosfwd>
#include <string>

#include "freiman/f2.hpp"

namespace freiman {

// Text format: a `dim <n>` header, then one hexadecimal point per line.
// Everything after `#` on a line is a comment.
PointSet read_set(std::istream& in);
PointSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const PointSet& a);
void write_set_file(const std::string& path, const PointSet& a);

}  // namespace freiman
