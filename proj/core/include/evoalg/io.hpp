#ifndef EVOALG_IO_HPP
#define EVOALG_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "evoalg/groups.hpp"
#include "evoalg/solver.hpp"

namespace evoalg {

using Json = nlohmann::ordered_json;

/// {"field": "Q(zeta_7)", "n": 3, "entries": [["0", "1", "0"], ...]}, row-major.
/// Unknown keys are ignored.
Json matrix_to_json(const Matrix& m);
/// Reads the matrix in `field` when given, otherwise in the file's "field".
Matrix matrix_from_json(const Json& j, const std::optional<Field>& field = {});

/// One-line 1-based images, e.g. [2, 3, 1].
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

/// {"sigma": [...], "d": ["...", ...]}
Json map_to_json(const MonomialMap& m);
MonomialMap map_from_json(const Json& j, const Field& field);

/// map_to_json plus {"checked": {"BP2_eq_PA": ..., "B_PstarP_zero": ...}}.
Json certificate_to_json(const Certificate& c);

/// {"n": 5, "adjacency": [[0, 1, ...], ...]}
Json graph_to_json(const std::vector<std::vector<int>>& adjacency);
std::vector<std::vector<int>> graph_from_json(const Json& j);

/// Order, element-order histogram, recognized names and a generator list.
Json group_to_json(const MonomialGroup& g);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Pretty-printed with a trailing newline; the only serializer used for
/// reports, so equal values give equal bytes.
std::string dump(const Json& j);

}  // namespace evoalg

#endif  // EVOALG_IO_HPP
