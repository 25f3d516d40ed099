#include "freiman/errors.hpp"

namespace freiman::detail {

void raise_defect(const char* expr, const char* file, int line, const std::string& msg) {
  throw DefectError("certificate violated: " + msg + " [" + expr + " at " + file + ":" +
                    std::to_string(line) + "]");
}

}  // namespace freiman::detail
