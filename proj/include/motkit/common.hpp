#pragma once

#include <stdexcept>
#include <string>

namespace motkit {

// Thrown on invalid input data (bad Cartan types, lattice violations,
// unresolved references, ...). The CLI maps it to exit code 2.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace motkit
