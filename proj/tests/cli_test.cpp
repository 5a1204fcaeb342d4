#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/graphs.hpp"
#include "uig/io.hpp"
#include "uig/oracle.hpp"
#include "uigtool/cli.hpp"

using namespace uig;
namespace tg = testing_graphs;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "uigtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = uigtool::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(UIG_DATA_DIR) + "/" + name; }

std::string write_temp(const Graph& g, const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("uigtool_" + name + ".txt");
  std::ofstream f(path);
  write_graph(f, g);
  return path.string();
}

Graph graph_from_json(const json& j) {
  EdgeSet es;
  for (const auto& e : j["edges"]) es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  return Graph::from_edges(j["n"].get<Vertex>(), es);
}

EditingSet editing_from_json(const json& j) {
  EditingSet s;
  s.deleted_vertices = j["vertices_deleted"].get<VertexSet>();
  for (const auto& e : j["edges_deleted"]) s.deleted_edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  for (const auto& e : j["edges_added"]) s.added_edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  return s;
}

}  // namespace

TEST(Cli, EdgeDeletionOnClaw) {
  auto r = run({"solve", "uied", data("claw.txt"), "-k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "YES\n-: 0 1\n");
}

TEST(Cli, EditingOnC6NeedsThreeAdditions) {
  EXPECT_EQ(run({"solve", "uie", data("c6.txt"), "--k1", "0", "--k2", "0", "--k3", "2"}).code, 1);
  auto yes = run({"solve", "uie", data("c6.txt"), "--k1", "0", "--k2", "0", "--k3", "3"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(std::count(yes.out.begin(), yes.out.end(), '\n'), 4);
}

TEST(Cli, RecognizeW5PrintsSixClasses) {
  auto r = run({"recognize", data("w5.txt")});
  EXPECT_EQ(r.code, 1);
  std::istringstream in(r.out);
  std::string head;
  std::getline(in, head);
  EXPECT_EQ(head, "FATW5");
  FatW5 f = read_fat_w5(in);
  EXPECT_TRUE(verify_fat_w5(read_graph_file(data("w5.txt")), f));
}

TEST(Cli, RecognizeModelAndWitness) {
  auto c6 = run({"recognize", data("c6.txt"), "--certify"});
  EXPECT_EQ(c6.code, 0);
  ASSERT_EQ(c6.out.substr(0, 6), "MODEL\n");
  ArcModel m = parse_arc_model(c6.out.substr(6));
  EXPECT_TRUE(verify_model(tg::cycle(6), m).ok());

  auto claw = run({"recognize", data("claw.txt")});
  EXPECT_EQ(claw.code, 1);
  ForbiddenWitness w = parse_witness(claw.out);
  EXPECT_EQ(w.kind, WitnessKind::Claw);
  EXPECT_TRUE(verify_witness(tg::claw(), w));
}

TEST(Cli, ShortestHole) {
  auto c6 = run({"shortest-hole", data("c6.txt"), "--certify"});
  EXPECT_EQ(c6.code, 0);
  EXPECT_EQ(c6.out.substr(0, 5), "HOLE ");
  auto p7 = run({"shortest-hole", data("p7.txt")});
  EXPECT_EQ(p7.code, 1);
  EXPECT_EQ(p7.out, "CHORDAL\n");
  // two holes in separate components: the shorter one wins
  auto path = write_temp(tg::disjoint_union(tg::cycle(7), tg::cycle(5)), "c7c5");
  auto both = run({"shortest-hole", path, "--json"});
  EXPECT_EQ(both.code, 0);
  auto hole = json::parse(both.out)["hole"].get<VertexSet>();
  EXPECT_EQ(hole.size(), 5u);
  for (Vertex v : hole) EXPECT_GE(v, 7);
}

TEST(Cli, ShortestHoleRejectsNonPhcag) {
  auto r = run({"shortest-hole", data("claw.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("WITNESS Claw"), std::string::npos);
}

TEST(Cli, ApproxReportsSize) {
  auto r = run({"approx", "uivd", data("net.txt"), "--certify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("size: "), std::string::npos);
}

TEST(Cli, JsonOutputRoundTrips) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto gen = run({"gen", "--kind", "perturbed", "--n", "8", "--seed", std::to_string(seed), "--json"});
    ASSERT_EQ(gen.code, 0);
    Graph g = graph_from_json(json::parse(gen.out)["graph"]);
    auto path = write_temp(g, "rt" + std::to_string(seed));
    for (std::vector<std::string> cmd : {std::vector<std::string>{"solve", "uivd", path, "-k", "2"},
                                         {"solve", "uied", path, "-k", "3"},
                                         {"solve", "uie", path, "--k1", "1", "--k2", "1", "--k3", "1"},
                                         {"approx", "uivd", path}}) {
      cmd.push_back("--json");
      auto r = run(cmd);
      ASSERT_TRUE(r.code == 0 || r.code == 1) << r.err;
      json j = json::parse(r.out);
      ASSERT_EQ(j["answer"] == "YES", r.code == 0);
      for (const char* f : {"answer", "vertices_deleted", "edges_deleted", "edges_added", "certificate_kind"}) {
        ASSERT_TRUE(j.contains(f)) << f;
      }
      if (r.code == 0) {
        ASSERT_TRUE(oracle::is_unit_interval_bruteforce(apply_editing(g, editing_from_json(j))));
      }
    }
  }
}

TEST(Cli, GeneratedGraphIsAValidGraphFile) {
  auto r = run({"gen", "--kind", "phcag", "--n", "9", "--seed", "3"});
  ASSERT_EQ(r.code, 0);
  Graph g = parse_graph(r.out);
  auto gen = oracle::random_phcag(9, 3);
  EXPECT_EQ(g, gen.graph);
  std::string model = r.out.substr(r.out.find("# MODEL\n") + 8);
  std::string plain;
  std::istringstream in(model);
  for (std::string line; std::getline(in, line);) plain += line.substr(2) + "\n";
  EXPECT_EQ(parse_arc_model(plain), gen.model);
}

TEST(Cli, CertifyMatchesOracleOnNoInstances) {
  EXPECT_EQ(run({"solve", "uivd", data("c6.txt"), "-k", "0", "--certify"}).code, 1);
  EXPECT_EQ(run({"solve", "uied", data("net.txt"), "-k", "0", "--certify"}).code, 1);
  EXPECT_EQ(run({"solve", "uie", data("c6.txt"), "--k3", "2", "--certify"}).code, 1);
}

TEST(Cli, CertifyGuard) {
  auto path = write_temp(tg::cycle(20), "c20");
  auto r = run({"solve", "uivd", path, "-k", "0", "--certify"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"solve", "uivd", path, "-k", "0"}).code, 1);
  EXPECT_EQ(run({"solve", "uivd", path, "-k", "1", "--certify"}).code, 3);
}

TEST(Cli, QuietPrintsNothing) {
  auto r = run({"--quiet", "solve", "uied", data("claw.txt"), "-k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"solve", "uivd", "/nonexistent.txt", "-k", "1"}).code, 2);
  EXPECT_EQ(run({"solve", "uivd", data("c6.txt")}).code, 2);
  EXPECT_EQ(run({"solve", "mystery", data("c6.txt"), "-k", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto bad = std::filesystem::temp_directory_path() / "uigtool_bad.txt";
  std::ofstream(bad) << "3 2\n0 1\n1 1\n";
  auto r = run({"recognize", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("self-loop"), std::string::npos);
  auto disconnected = write_temp(tg::disjoint_union(tg::path(2), tg::path(2)), "disc");
  EXPECT_EQ(run({"recognize", disconnected}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
