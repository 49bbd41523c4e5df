#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "radix/matrix.hpp"
#include "radix/space.hpp"
#include "radix/tensor.hpp"

namespace radix::cli {

using Json = nlohmann::ordered_json;

/// {"dim": n, "gram": [[...], ...]} with rational strings or integers.
Space parse_space(const Json& doc);
Space load_space(const std::filesystem::path& path);

/// {"type": [r, s], "dim": n, "components": [...], "basis": [[...]]?}.
/// `basis` rows are coordinates, its columns the basis vectors.
Tensor parse_tensor(const Json& doc);
Tensor load_tensor(const std::filesystem::path& path);

/// {"dim": n, "basis": [[...]]} whose columns span a screen.
std::vector<Vector> parse_screen(const Json& doc);
std::vector<Vector> load_screen(const std::filesystem::path& path);

/// Field order: dim, type, components, basis (omitted for the identity).
Json tensor_to_json(const Tensor& t);
Json space_to_json(const Space& s);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

}  // namespace radix::cli
