#include "slhs/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slhs {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string matrix_to_json(const Matrix& m, const std::vector<Index>& dims) {
  std::ostringstream os;
  os << "{\"dims\": [";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? ", " : "") << dims[i];
  os << "], \"matrix\": [";
  for (Index r = 0; r < m.rows(); ++r) {
    os << (r ? ", " : "") << "[";
    for (Index c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << "[" << fmt17(m(r, c).real()) << ", " << fmt17(m(r, c).imag())
         << "]";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::string state_to_json(const BipartiteState& s) {
  return matrix_to_json(s.mat(), {s.dimA(), s.dimB()});
}

std::string state_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.mat(), {rho.dim()});
}

MatrixFile matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
    throw std::runtime_error("state file: expected object with \"dims\" and \"matrix\"");
  if (!j["dims"].is_array() || j["dims"].empty() || j["dims"].size() > 2)
    throw std::runtime_error("state file: \"dims\" must be [d] or [dA, dB]");

  MatrixFile out;
  Index total = 1;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<Index>() < 1)
      throw std::runtime_error("state file: \"dims\" entries must be positive integers");
    out.dims.push_back(d.get<Index>());
    total *= out.dims.back();
  }

  const auto& rows = j["matrix"];
  if (!rows.is_array() || static_cast<Index>(rows.size()) != total)
    throw std::runtime_error("state file: \"matrix\" must have " + std::to_string(total) +
                             " rows");
  out.matrix.resize(total, total);
  for (Index r = 0; r < total; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != total)
      throw std::runtime_error("state file: row " + std::to_string(r) + " must have " +
                               std::to_string(total) + " entries");
    for (Index c = 0; c < total; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw std::runtime_error("state file: entry (" + std::to_string(r) + ", " +
                                 std::to_string(c) + ") must be [re, im]");
      out.matrix(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return out;
}

BipartiteState bipartite_from_json(const std::string& text) {
  MatrixFile f = matrix_from_json(text);
  if (f.dims.size() != 2)
    throw std::runtime_error("state file: bipartite state requires \"dims\": [dA, dB]");
  return BipartiteState(f.dims[0], f.dims[1], DensityMatrix(std::move(f.matrix)));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace slhs
