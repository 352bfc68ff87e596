#pragma once

#include <stdexcept>
#include <string>

namespace finbool {

// Malformed or inconsistent input: bad JSON shape, ground-size mismatch,
// out-of-range indices, non-bijective coordinate maps.  CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested truncation depth is not available (e.g. a cylinder stage whose
// anchor position falls outside the configured prefix).  CLI exit code 2.
class truncation_error : public input_error {
 public:
  explicit truncation_error(const std::string& what) : input_error(what) {}
};

// A configured work or size cap was exceeded.  CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finbool
