#pragma once

// Matrix document ingestion.  Text format:
//
//   field Q            (or GF2)
//   n 3
//   left
//   1 1 1
//   1 2 2
//   1 2 2
//   right              (optional; defaults to the identity)
//   1 0 0
//   0 1 0
//   0 0 1
//
// Entries are exact: integers or p/q fractions over Q, 0/1 over GF(2).
// Blank lines and lines starting with '#' are ignored.  Construction
// validates the representation invariants.

#include <iosfwd>
#include <optional>
#include <string>

#include "lagmat/represent.hpp"

namespace lagmat {

struct MatrixDocument {
  enum class Field { Q, GF2 };

  Field field = Field::Q;
  int n = 0;
  std::optional<Representation<Rat>> rat;
  std::optional<Representation<GF2>> gf2;

  const Representation<Rat>& rational() const;  // throws when field != Q
};

MatrixDocument parse_matrix_document(std::istream& in);
MatrixDocument load_matrix_document(const std::string& path);

}  // namespace lagmat
