#include "cli/io.hpp"

#include <fstream>
#include <sstream>

#include "radix/error.hpp"

namespace radix::cli {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) fail("document must be a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t parse_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Scalar parse_entry(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  fail("rational entries must be strings like \"-3/7\" or integers, got " + j.dump());
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) {
    fail(std::string(what) + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      fail(std::string(what) + " row " + std::to_string(r + 1) + " must have " +
           std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry(row[c]);
  }
  return m;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

Space parse_space(const Json& doc) {
  const std::size_t dim = parse_count(field(doc, "dim"), "dim");
  Matrix gram = parse_matrix(field(doc, "gram"), dim, dim, "gram");
  return Space(std::move(gram));
}

Space load_space(const std::filesystem::path& path) { return parse_space(read_json_file(path)); }

Tensor parse_tensor(const Json& doc) {
  const Json& type = field(doc, "type");
  if (!type.is_array() || type.size() != 2) fail("type must be a pair [r, s]");
  const std::size_t contra = parse_count(type[0], "type[0]");
  const std::size_t cova = parse_count(type[1], "type[1]");
  const std::size_t dim = parse_count(field(doc, "dim"), "dim");

  const Json& comps = field(doc, "components");
  const std::size_t expected = ipow(dim, contra + cova);
  if (!comps.is_array() || comps.size() != expected) {
    fail("components must be a flat array of " + std::to_string(expected) + " entries");
  }
  std::vector<Scalar> values;
  values.reserve(expected);
  for (const auto& c : comps) values.push_back(parse_entry(c));

  std::optional<Matrix> basis;
  if (auto it = doc.find("basis"); it != doc.end()) basis = parse_matrix(*it, dim, dim, "basis");
  return Tensor(dim, contra, cova, std::move(values), std::move(basis));
}

Tensor load_tensor(const std::filesystem::path& path) { return parse_tensor(read_json_file(path)); }

std::vector<Vector> parse_screen(const Json& doc) {
  const std::size_t dim = parse_count(field(doc, "dim"), "dim");
  const Json& b = field(doc, "basis");
  if (!b.is_array() || b.size() != dim) fail("screen basis must have dim rows");
  const std::size_t cols = dim ? b[0].size() : 0;
  return parse_matrix(b, dim, cols, "screen basis").columns();
}

std::vector<Vector> load_screen(const std::filesystem::path& path) {
  return parse_screen(read_json_file(path));
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json tensor_to_json(const Tensor& t) {
  Json out = Json::object();
  out["dim"] = t.dim();
  out["type"] = Json::array({t.contra(), t.cova()});
  out["components"] = vector_to_json(t.components());
  if (!t.in_ambient_basis()) out["basis"] = matrix_to_json(t.basis());
  return out;
}

Json space_to_json(const Space& s) {
  Json out = Json::object();
  out["dim"] = s.dim();
  out["gram"] = matrix_to_json(s.gram());
  return out;
}

}  // namespace radix::cli
