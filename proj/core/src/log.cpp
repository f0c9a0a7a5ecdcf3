#include "promap/log.hpp"

#include <iostream>

namespace promap {

void warn(std::string_view message) {
  std::cerr << "[promap] warning: " << message << "\n";
}

}  // namespace promap
