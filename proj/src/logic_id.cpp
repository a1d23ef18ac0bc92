#include "gcl/logic_id.hpp"

#include <cctype>
#include <stdexcept>

namespace gcl {

std::string LogicId::name() const {
  std::string out;
  if (serial) out += 'S';
  if (independent) out += 'I';
  if (deterministic) out += 'D';
  return out.empty() ? "E" : out;
}

LogicId LogicId::parse(std::string_view text) {
  std::string upper;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  if (upper == "MCL" || upper == "E" || upper.empty()) return {};
  if (upper == "CL") return {true, true, true};
  LogicId id;
  for (char c : upper) {
    bool* flag = nullptr;
    switch (c) {
      case 'S': flag = &id.serial; break;
      case 'I': flag = &id.independent; break;
      case 'D': flag = &id.deterministic; break;
      default:
        throw std::invalid_argument("unknown logic '" + std::string(text) +
                                    "' (expected letters from S, I, D, or E, MCL, CL)");
    }
    if (*flag) throw std::invalid_argument("repeated letter in logic '" + std::string(text) + "'");
    *flag = true;
  }
  return id;
}

std::array<LogicId, 8> LogicId::all() {
  std::array<LogicId, 8> out{};
  for (int m = 0; m < 8; ++m) {
    out[m] = LogicId{(m & 1) != 0, (m & 2) != 0, (m & 4) != 0};
  }
  return out;
}

}  // namespace gcl
