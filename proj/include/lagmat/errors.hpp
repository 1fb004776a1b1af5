#pragma once

#include <stdexcept>
#include <string>

namespace lagmat {

// Violated precondition or exceeded guard on otherwise well-formed input.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: basis notation, matrix documents.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lagmat
