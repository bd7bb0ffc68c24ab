#ifndef RAAG_ERROR_HPP
#define RAAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace raag {

// Bad arguments or malformed caller data.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Bundled or user-supplied data files failing their validation suite.
struct data_error : std::runtime_error {
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified postcondition failed; signals a bug or contradictory inputs.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace raag

#endif
