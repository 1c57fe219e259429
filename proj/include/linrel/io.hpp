#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "linrel/covering.hpp"
#include "linrel/kronecker.hpp"
#include "linrel/reduction.hpp"
#include "linrel/relation.hpp"

namespace linrel {

using Json = nlohmann::json;

inline constexpr int kReportVersion = 1;

// Parse errors are Error(InvalidInput) whose message starts with the JSON
// path of the offending value, e.g. "$.relations[1][0]: expected an integer".
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

Ring ring_from_json(const Json& j, const std::string& path = "$");
FgModule module_from_json(const Json& j, const std::string& path = "$");
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path = "$");
ModHom hom_from_json(const Json& j, const FgModule& dom, const FgModule& cod, const std::string& path = "$");
Vec vector_from_json(const Json& j, std::size_t len, const std::string& path = "$");
// Element given as JSON text such as "[1,0]".
Vec element_from_text(const std::string& text, std::size_t len);

struct RelationFile {
  LinearRelation relation;
  std::vector<Vec> generators;  // as written, reduced into the ambient module
};
RelationFile relation_from_json(const Json& j, const std::string& path = "$");
Rep rep_from_json(const Json& j, const std::string& path = "$");
BDiagram diagram_from_json(const Json& j, const std::string& path = "$");
Reduction candidate_from_json(const Json& j, const FgModule& m, const std::string& path = "$");

// Canonical serializations; parsing them gives back equal objects.
Json to_json(const Ring& r);
Json to_json(const FgModule& m);
Json to_json(const Matrix& m);
Json to_json(const ModHom& f);
Json to_json(const LinearRelation& c);
Json to_json(const Rep& x);
Json to_json(const RepMorphism& f);
Json vec_json(const Vec& v);
Json vecs_json(const std::vector<Vec>& vs);
// Generators, order and invariant factors of a submodule.
Json submodule_json(const Submodule& s);

// {"format":"linrel-report","version":1,"command":...,"result":...}.
Json make_report(const std::string& command, Json result);
// Sorted keys and fixed indentation: identical inputs give identical bytes.
std::string dump_report(const Json& report);
// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace linrel
