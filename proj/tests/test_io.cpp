#include <gtest/gtest.h>

#include <cstdlib>

#include "linrel/examples.hpp"
#include "linrel/io.hpp"
#include "linrel/oracle.hpp"
#include "linrel/suites.hpp"

using namespace linrel;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return {};
}

Json parse(const std::string& s) { return parse_json_text(s, "test"); }

}  // namespace

TEST(Io, RingForms) {
  EXPECT_EQ(ring_from_json(parse(R"({"ring":"Z"})")), Ring::integers());
  EXPECT_EQ(ring_from_json(parse(R"({"ring":"Z/n","n":6})")), Ring::mod(6));
  EXPECT_EQ(ring_from_json(parse(R"({"ring":"Z/6"})")), Ring::mod(6));
  EXPECT_EQ(ring_from_json(parse(R"({"ring":{"ring":"Z/n","n":6}})")), Ring::mod(6));
  EXPECT_NE(error_of([] { ring_from_json(parse(R"({"ring":"Z/n"})")); }).find("missing key \"n\""), std::string::npos);
  EXPECT_EQ(error_of([] { ring_from_json(parse(R"({"ring":"Z/n","n":1})")); }).rfind("$.n:", 0), 0u);
  EXPECT_EQ(error_of([] { ring_from_json(parse(R"({"ring":"Q"})")); }).rfind("$.ring:", 0), 0u);
}

TEST(Io, ModuleFlatAndNestedAgree) {
  FgModule a = module_from_json(parse(R"({"ring":"Z/n","n":4,"ambient_rank":2,"relations":[[0,2]]})"));
  FgModule b = module_from_json(parse(R"({"ring":{"ring":"Z/n","n":4},"ambient_rank":2,"relations":[[0,6]]})"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, example_a().module);
  EXPECT_EQ(module_from_json(to_json(a)), a);
}

TEST(Io, RoundTripsAreCanonical) {
  Rng rng(70);
  for (int t = 0; t < 50; ++t) {
    RelationInstance ri = random_relation(rng);
    Json j = to_json(ri.relation);
    LinearRelation back = relation_from_json(j).relation;
    EXPECT_EQ(back, ri.relation);
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(relation_from_json(parse(j.dump())).relation, ri.relation);
    Rep x = random_rep(rng, random_ring(rng));
    Json jr = to_json(x);
    EXPECT_EQ(rep_from_json(jr), x);
    EXPECT_EQ(to_json(rep_from_json(jr)), jr);
  }
  FgModule z = module_from_json(parse(R"({"ring":"Z","ambient_rank":2,"relations":[[2,0]]})"));
  EXPECT_EQ(module_from_json(to_json(z)), z);
}

TEST(Io, ErrorLocations) {
  EXPECT_EQ(error_of([] { module_from_json(parse(R"({"ring":"Z/4","ambient_rank":2,"relations":[[1,0],[1]]})")); })
                .rfind("$.relations[1]: expected 2 entries", 0),
            0u);
  EXPECT_EQ(error_of([] { module_from_json(parse(R"({"ring":"Z/4","ambient_rank":-1})")); }).rfind("$.ambient_rank:", 0), 0u);
  EXPECT_EQ(error_of([] {
              relation_from_json(parse(R"({"domain":{"ring":"Z/4","ambient_rank":1},
                "codomain":{"ring":"Z/4","ambient_rank":1},"generators":[[1,true]]})"));
            }).rfind("$.generators[0][1]: expected an integer", 0),
            0u);
  EXPECT_EQ(error_of([] {
              relation_from_json(parse(R"({"domain":{"ring":"Z/4","ambient_rank":1},
                "codomain":{"ring":"Z/6","ambient_rank":1},"generators":[]})"));
            }).rfind("$.codomain:", 0),
            0u);
  EXPECT_EQ(error_of([] {
              rep_from_json(parse(R"({"Mt":{"ring":"Z/4","ambient_rank":1,"relations":[[2]]},
                "Mh":{"ring":"Z/4","ambient_rank":1},"mu_a":{"matrix":[[1]]},"mu_b":{"matrix":[[0]]}})"));
            }).rfind("$.mu_a.matrix:", 0),
            0u);
  EXPECT_EQ(error_of([] { rep_from_json(parse(R"({"Mt":{"ring":"Z/4","ambient_rank":1}})")); }).rfind("$: missing key \"Mh\"", 0),
            0u);
  std::string syntax = error_of([] { parse_json_text("{\n  \"a\": [1,\n}", "f.json"); });
  EXPECT_EQ(syntax.rfind("f.json:3:", 0), 0u);
  EXPECT_EQ(error_of([] { element_from_text("[1,2]", 1); }).rfind("element: expected 1 entries", 0), 0u);
}

TEST(Io, Diagrams) {
  BDiagram i = diagram_from_json(parse(R"({"kind":"procedural","name":"example_i","params":{"n":4}})"));
  EXPECT_EQ(i.info().name, "example_i");
  EXPECT_EQ(i.mho("0101").matrix(), Matrix::identity(1));
  BDiagram c = diagram_from_json(
      parse(R"({"kind":"procedural","name":"constant","params":{"ring":"Z/6","rank":2,"omega":2,"mho":3}})"));
  EXPECT_EQ(c.ring(), Ring::mod(6));
  EXPECT_EQ(c.module("").rank(), 2u);
  EXPECT_EQ(error_of([] {
              diagram_from_json(parse(R"({"kind":"procedural","name":"constant","params":{"omega":1,"mho":1}})"));
            }).rfind("$.params:", 0),
            0u);
  EXPECT_EQ(error_of([] { diagram_from_json(parse(R"({"kind":"procedural","name":"nope"})")); }).rfind("$.name:", 0), 0u);
  const char* table = R"({"kind":"table","depth":1,"nodes":{
    "":{"module":{"ring":"Z/2","ambient_rank":1},"omega":{"matrix":[[0]]},"mho":{"matrix":[[1]]}},
    "0":{"module":{"ring":"Z/2","ambient_rank":1}},
    "1":{"module":{"ring":"Z/2","ambient_rank":1}}}})";
  BDiagram t = diagram_from_json(parse(table));
  RayResult r = ray_search(t, {1}, 3);
  EXPECT_TRUE(std::holds_alternative<Case2>(r.outcome));
  EXPECT_NE(error_of([] {
              diagram_from_json(parse(R"({"kind":"table","depth":1,"nodes":{
                "":{"module":{"ring":"Z/2","ambient_rank":1},"omega":{"matrix":[[1]]},"mho":{"matrix":[[1]]}},
                "0":{"module":{"ring":"Z/2","ambient_rank":1}},"1":{"module":{"ring":"Z/2","ambient_rank":1}}}})"));
            }).find("kernel of omega"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              diagram_from_json(parse(R"({"kind":"table","depth":1,"nodes":{
                "":{"module":{"ring":"Z/2","ambient_rank":1},"omega":{"matrix":[[0]]},"mho":{"matrix":[[1]]}},
                "1":{"module":{"ring":"Z/2","ambient_rank":1}}}})"));
            }).find("\"0\" is missing"),
            std::string::npos);
}

TEST(Io, Candidate) {
  ExampleA ex = example_a();
  Reduction r = candidate_from_json(
      parse(R"({"X":{"ring":"Z/4","ambient_rank":1},"T":{"matrix":[[1]]},"rho":{"matrix":[[1],[0]]}})"), ex.module);
  EXPECT_TRUE(check_reduction(ex.d, r).ok());
  EXPECT_EQ(error_of([&] {
              candidate_from_json(
                  parse(R"({"X":{"ring":"Z/4","ambient_rank":1},"T":{"matrix":[[2]]},"rho":{"matrix":[[1],[0]]}})"),
                  ex.module);
            }).rfind("$.T:", 0),
            0u);
}

TEST(Io, ReportsAreVersionedAndDeterministic) {
  Json a = make_report("check", to_json(run_suite("oracle", 4, 12)));
  Json b = make_report("check", to_json(run_suite("oracle", 4, 12)));
  EXPECT_EQ(dump_report(a), dump_report(b));
  EXPECT_EQ(a["format"], "linrel-report");
  EXPECT_EQ(a["version"], kReportVersion);
  EXPECT_NE(render_text(a).find("suite: oracle"), std::string::npos);
}

TEST(Io, SeededInstancesAreReproducible) {
  EXPECT_EQ(random_instance_json(11), random_instance_json(11));
  EXPECT_NE(random_instance_json(11), random_instance_json(12));
  Rng a = instance_rng(5, 3), b = instance_rng(5, 3);
  EXPECT_EQ(a(), b());
  // Instance i draws the same data whatever the run length.
  SuiteResult shortrun = run_suite("reduction", 9, 6), longrun = run_suite("reduction", 9, 30);
  EXPECT_LE(shortrun.skipped, longrun.skipped);
  EXPECT_LE(shortrun.passed, longrun.passed);
  Json inst = random_instance_json(8);
  EXPECT_EQ(to_json(relation_from_json(inst).relation.domain()), inst["domain"]);
}

TEST(Io, EverySuiteRuns) {
  for (const std::string& name : suite_names()) EXPECT_TRUE(run_suite(name, 2, 6).ok()) << name;
  EXPECT_THROW(run_suite("missing", 0, 1), Error);
}

TEST(Io, OracleCapOverride) {
  setenv("LINREL_ORACLE_CAP", "10", 1);
  EXPECT_EQ(oracle_cap(), 10);
  FgModule m = FgModule::free(Ring::mod(4), 2);
  try {
    oracle_stable_sets(m, {{1, 0, 0, 1}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModuleTooLarge);
  }
  unsetenv("LINREL_ORACLE_CAP");
  EXPECT_EQ(oracle_cap(), 4096);
}
