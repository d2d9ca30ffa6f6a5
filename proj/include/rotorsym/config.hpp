// JSON config parsing into a ProblemSpec. Errors name the offending JSON
// path so configs can be fixed without reading source.
#pragma once

#include <stdexcept>
#include <string>

#include "rotorsym/problem.hpp"

namespace rotorsym::domain {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Accepts either {"preset": "...", "omega": {...}} or explicit
// {"vector_potential": {...}, "scalar_potential": {...}}, plus an optional
// "domain_hint". See README for the full schema.
ProblemSpec parse_config(const std::string& text);
ProblemSpec load_config_file(const std::string& path);

} // namespace rotorsym::domain
