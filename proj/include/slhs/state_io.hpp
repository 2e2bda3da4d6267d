// state_io.hpp
// JSON persistence for states and matrices.
//
// Bipartite state:      {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
// Single-system state:  {"dims": [d], "matrix": ...}
// Matrices are row-major; writers emit 17 significant digits so a
// write/read round trip is lossless.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slhs/core.hpp"

namespace slhs {

std::string matrix_to_json(const Matrix& m, const std::vector<Index>& dims);
std::string state_to_json(const BipartiteState& s);
std::string state_to_json(const DensityMatrix& rho);

/// Parsed payload of a state file: the raw matrix plus the declared dims.
struct MatrixFile {
  std::vector<Index> dims;
  Matrix matrix;
};

/// Throws std::runtime_error with a field-level diagnostic on malformed input.
MatrixFile matrix_from_json(const std::string& text);

BipartiteState bipartite_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace slhs
