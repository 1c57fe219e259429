#include "linrel/io.hpp"

#include <fstream>
#include <sstream>

namespace linrel {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(ErrorKind::InvalidInput, path + ": " + msg);
}

// Runs a constructor and reports its failure at the given path.
template <class F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    bad(path, e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing key \"") + key + "\"");
  return *it;
}

Int integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) bad(path, "integer out of range");
    return static_cast<Int>(j.get<std::uint64_t>());
  }
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<Int>();
}

std::size_t count(const Json& j, const std::string& path) {
  Int v = integer(j, path);
  if (v < 0) bad(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::vector<Vec> rows_of(const Json& j, std::size_t len, const std::string& path) {
  std::vector<Vec> out;
  const Json& a = array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(vector_from_json(a[i], len, path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string child(const std::string& path, const char* key) { return path + "." + key; }

Int param(const Json& params, const char* key, Int fallback, const std::string& path) {
  auto it = params.find(key);
  return it == params.end() ? fallback : integer(*it, child(path, key));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    fail(ErrorKind::InvalidInput, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                      (pos == std::string::npos ? msg : msg.substr(pos)));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Ring ring_from_json(const Json& j, const std::string& path) {
  const Json& r = field(j, "ring", path);
  std::string rp = child(path, "ring");
  if (r.is_object()) return ring_from_json(r, rp);
  if (!r.is_string()) bad(rp, "expected \"Z\" or \"Z/n\"");
  std::string s = r.get<std::string>();
  if (s == "Z") return Ring::integers();
  if (s.rfind("Z/", 0) != 0) bad(rp, "unknown ring \"" + s + "\"");
  Int n = 0;
  if (j.contains("n")) {
    n = integer(j["n"], child(path, "n"));
    if (s != "Z/n" && s != "Z/" + std::to_string(n)) bad(rp, "ring name disagrees with n");
  } else {
    if (s == "Z/n") bad(path, "missing key \"n\"");
    try {
      std::size_t used = 0;
      n = std::stoll(s.substr(2), &used);
      if (used != s.size() - 2) bad(rp, "malformed modulus");
    } catch (const std::logic_error&) {
      bad(rp, "malformed modulus");
    }
  }
  if (n < 2) bad(j.contains("n") ? child(path, "n") : rp, "modulus must be at least 2");
  return Ring::mod(n);
}

Vec vector_from_json(const Json& j, std::size_t len, const std::string& path) {
  const Json& a = array(j, path);
  if (a.size() != len) bad(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(a.size()));
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = integer(a[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Vec element_from_text(const std::string& text, std::size_t len) {
  return vector_from_json(parse_json_text(text, "element"), len, "element");
}

FgModule module_from_json(const Json& j, const std::string& path) {
  Ring ring = ring_from_json(j, path);
  std::size_t rank = count(field(j, "ambient_rank", path), child(path, "ambient_rank"));
  std::vector<Vec> rels;
  if (j.contains("relations")) rels = rows_of(j["relations"], rank, child(path, "relations"));
  return at(path, [&] { return FgModule(ring, rank, rels); });
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  const Json& a = array(j, path);
  if (a.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(a.size()));
  return Matrix::from_rows(rows_of(a, cols, path), cols);
}

ModHom hom_from_json(const Json& j, const FgModule& dom, const FgModule& cod, const std::string& path) {
  std::string mp = child(path, "matrix");
  Matrix m = matrix_from_json(field(j, "matrix", path), cod.rank(), dom.rank(), mp);
  return at(mp, [&] { return ModHom(dom, cod, m); });
}

RelationFile relation_from_json(const Json& j, const std::string& path) {
  FgModule dom = module_from_json(field(j, "domain", path), child(path, "domain"));
  FgModule cod = module_from_json(field(j, "codomain", path), child(path, "codomain"));
  if (!(dom.ring() == cod.ring())) bad(child(path, "codomain"), "ring differs from the domain ring");
  std::string gp = child(path, "generators");
  std::vector<Vec> gens = rows_of(field(j, "generators", path), dom.rank() + cod.rank(), gp);
  FgModule sum = direct_sum(dom, cod);
  for (Vec& g : gens) g = sum.reduce(g);
  LinearRelation rel = at(gp, [&] { return LinearRelation::generated(dom, cod, gens); });
  return {rel, gens};
}

Rep rep_from_json(const Json& j, const std::string& path) {
  FgModule mt = module_from_json(field(j, "Mt", path), child(path, "Mt"));
  FgModule mh = module_from_json(field(j, "Mh", path), child(path, "Mh"));
  if (!(mt.ring() == mh.ring())) bad(child(path, "Mh"), "ring differs from the ring of Mt");
  ModHom a = hom_from_json(field(j, "mu_a", path), mt, mh, child(path, "mu_a"));
  ModHom b = hom_from_json(field(j, "mu_b", path), mt, mh, child(path, "mu_b"));
  return at(path, [&] { return Rep(a, b); });
}

BDiagram diagram_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  std::string kp = child(path, "kind");
  if (!kind.is_string()) bad(kp, "expected \"table\" or \"procedural\"");
  if (kind == "procedural") {
    const Json& name = field(j, "name", path);
    std::string np = child(path, "name");
    if (!name.is_string()) bad(np, "expected a string");
    Json params = j.contains("params") ? j["params"] : Json::object();
    std::string pp = child(path, "params");
    if (!params.is_object()) bad(pp, "expected an object");
    std::string s = name.get<std::string>();
    auto ring = [&]() { return params.contains("ring") ? ring_from_json(params, pp) : Ring::mod(param(params, "n", 4, pp)); };
    return at(path, [&]() -> BDiagram {
      if (s == "example_h") return example_h(param(params, "n", 4, pp));
      if (s == "example_i") return example_i(param(params, "n", 4, pp));
      if (s == "zero") return zero_diagram(ring());
      if (s == "constant") {
        Int rank = param(params, "rank", 1, pp);
        if (rank < 0) bad(child(pp, "rank"), "expected a non-negative integer");
        Ring r = ring();
        Int om = r.reduce(param(params, "omega", 0, pp)), mh = r.reduce(param(params, "mho", 0, pp));
        if (r.reduce(mul(om, mh)) != 0) bad(pp, "omega * mho must vanish");
        return constant_diagram(r, static_cast<std::size_t>(rank), om, mh, "constant");
      }
      if (s == "random") {
        Int seed = param(params, "seed", 0, pp), rank = param(params, "max_rank", 2, pp);
        if (seed < 0) bad(child(pp, "seed"), "expected a non-negative integer");
        if (rank < 1) bad(child(pp, "max_rank"), "expected a positive integer");
        return random_diagram(ring(), static_cast<std::uint64_t>(seed), static_cast<std::size_t>(rank));
      }
      bad(np, "unknown diagram \"" + s + "\"");
    });
  }
  if (kind != "table") bad(kp, "expected \"table\" or \"procedural\"");
  std::size_t depth = count(field(j, "depth", path), child(path, "depth"));
  const Json& nodes = field(j, "nodes", path);
  std::string nodes_path = child(path, "nodes");
  if (!nodes.is_object()) bad(nodes_path, "expected an object");
  std::map<std::string, FgModule> modules;
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    std::string vp = nodes_path + "[\"" + it.key() + "\"]";
    for (char c : it.key())
      if (c != '0' && c != '1') bad(vp, "vertex names are strings over {0,1}");
    if (it.key().size() > depth) bad(vp, "vertex deeper than the table depth");
    modules[it.key()] = module_from_json(field(*it, "module", vp), vp + ".module");
  }
  if (!modules.count("")) bad(nodes_path, "missing the root vertex \"\"");
  Ring ring = modules[""].ring();
  std::map<std::string, NodeData> data;
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    const std::string& s = it.key();
    std::string vp = nodes_path + "[\"" + s + "\"]";
    if (!(modules[s].ring() == ring)) bad(vp + ".module", "ring differs from the root ring");
    NodeData nd{modules[s], std::nullopt, std::nullopt};
    bool last = s.size() == depth;
    for (const char* key : {"omega", "mho"}) {
      bool is_omega = std::string(key) == "omega";
      std::string nb = is_omega ? plus_child(s) : minus_child(s);
      if (!it->contains(key)) {
        if (!last) bad(vp, std::string("missing key \"") + key + "\"");
        continue;
      }
      if (!modules.count(nb)) bad(vp + "." + key, "neighbouring vertex \"" + nb + "\" is missing");
      ModHom f = is_omega ? hom_from_json((*it)[key], modules[s], modules[nb], vp + "." + key)
                          : hom_from_json((*it)[key], modules[nb], modules[s], vp + "." + key);
      (is_omega ? nd.omega : nd.mho) = f;
    }
    if (nd.omega.has_value() != nd.mho.has_value()) bad(vp, "omega and mho must both be present or both absent");
    if (nd.omega && !image(*nd.mho).subset_of(kernel(*nd.omega))) bad(vp, "the image of mho is not in the kernel of omega");
    data[s] = nd;
  }
  for (const auto& [s, nd] : data) {
    if (s.size() < depth) {
      for (const std::string& nb : {plus_child(s), minus_child(s)})
        if (!data.count(nb)) bad(nodes_path, "vertex \"" + nb + "\" is missing");
    }
  }
  return table_diagram(ring, depth, std::move(data));
}

Reduction candidate_from_json(const Json& j, const FgModule& m, const std::string& path) {
  FgModule x = module_from_json(field(j, "X", path), child(path, "X"));
  if (!(x.ring() == m.ring())) bad(child(path, "X"), "ring differs from the relation's ring");
  ModHom t = hom_from_json(field(j, "T", path), x, x, child(path, "T"));
  ModHom rho = hom_from_json(field(j, "rho", path), x, m, child(path, "rho"));
  LaurentModule lx = at(child(path, "T"), [&] { return make_laurent(t); });
  return {lx, rho};
}

Json to_json(const Ring& r) {
  if (r.is_integers()) return Json{{"ring", "Z"}};
  return Json{{"ring", "Z/n"}, {"n", r.modulus()}};
}

Json vec_json(const Vec& v) { return Json(v); }

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(vec_json(v));
  return a;
}

Json to_json(const FgModule& m) {
  Json j = to_json(m.ring());
  j["ambient_rank"] = m.rank();
  j["relations"] = vecs_json(m.relations());
  return j;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

Json to_json(const ModHom& f) { return Json{{"matrix", to_json(f.matrix())}}; }

Json to_json(const LinearRelation& c) {
  return Json{{"domain", to_json(c.domain())},
              {"codomain", to_json(c.codomain())},
              {"generators", vecs_json(c.submodule().generators())}};
}

Json to_json(const Rep& x) {
  return Json{{"Mt", to_json(x.mt())}, {"Mh", to_json(x.mh())}, {"mu_a", to_json(x.mu_a())}, {"mu_b", to_json(x.mu_b())}};
}

Json to_json(const RepMorphism& f) { return Json{{"t", to_json(f.t)}, {"h", to_json(f.h)}}; }

Json submodule_json(const Submodule& s) {
  Json j{{"generators", vecs_json(s.generators())}, {"invariants", vec_json(invariant_factors(s))}};
  j["order"] = s.parent().is_finite() ? Json(s.order()) : Json(nullptr);
  return j;
}

Json make_report(const std::string& command, Json result) {
  return Json{{"format", "linrel-report"}, {"version", kReportVersion}, {"command", command}, {"result", std::move(result)}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_flat_array(const Json& j) {
  for (const Json& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = j.is_object() ? it.key() : "-";
    const Json& v = *it;
    if (v.is_object() || (v.is_array() && !is_flat_array(v))) {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    } else if (v.is_string()) {
      out << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace linrel
