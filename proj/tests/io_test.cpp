#include <gtest/gtest.h>

#include <sstream>

#include "support/graphs.hpp"
#include "uig/io.hpp"
#include "uig/oracle.hpp"

using namespace uig;
namespace tg = testing_graphs;

TEST(GraphFormat, ParsesEdgeList) {
  Graph g = parse_graph("4 3\n0 1\n0 2\n0 3\n");
  EXPECT_EQ(g, tg::claw());
}

TEST(GraphFormat, AllowsCommentsAndBlankLines) {
  Graph g = parse_graph("# claw\n4 3\n\n0 1   # centre\n0\t2\n3 0\n");
  EXPECT_EQ(g, tg::claw());
}

TEST(GraphFormat, RoundTrips) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::random_phcag(5 + static_cast<Vertex>(seed), seed).graph;
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse_graph(out.str()), g);
  }
  std::ostringstream empty;
  write_graph(empty, Graph(0));
  EXPECT_EQ(parse_graph(empty.str()), Graph(0));
}

TEST(GraphFormat, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n-1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("-3 0\n"), ParseError);
}

TEST(GraphFormat, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(parse_graph("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n0 1\n"), ParseError);
}

TEST(GraphFormat, ErrorsNameTheLine) {
  try {
    parse_graph("3 2\n0 1\n2 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(GraphFormat, MissingFile) { EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError); }

TEST(ArcModelFormat, RoundTrips) {
  ArcModel m = oracle::cycle_model(5);
  std::ostringstream out;
  write_arc_model(out, m);
  EXPECT_EQ(out.str(), "5 10\n9 2\n1 4\n3 6\n5 8\n7 0\n");
  EXPECT_EQ(parse_arc_model(out.str()), m);
}

TEST(ArcModelFormat, RejectsMalformedInput) {
  EXPECT_THROW(parse_arc_model("2 4\n0 1\n"), ParseError);
  EXPECT_THROW(parse_arc_model("1 0\n0 0\n"), ParseError);
  EXPECT_THROW(parse_arc_model("1 4\n0 4\n"), ParseError);
  EXPECT_THROW(parse_arc_model("1 4\n0 1\n2 3\n"), ParseError);
}

TEST(ArcModelFormat, NonCanonicalModelsStillParse) {
  ArcModel m = parse_arc_model("2 10\n0 3\n2 7\n");
  EXPECT_FALSE(is_canonical(m));
  EXPECT_EQ(m.arcs[1], (Arc{2, 7}));
}

TEST(WitnessFormat, RoundTrips) {
  ForbiddenWitness w{WitnessKind::S3Bar, {0, 1, 2, 3, 4, 5}};
  EXPECT_EQ(to_string(w), "WITNESS S3Bar 0 1 2 3 4 5");
  ForbiddenWitness back = parse_witness(to_string(w));
  EXPECT_EQ(back.kind, w.kind);
  EXPECT_EQ(back.vertices, w.vertices);
}

TEST(WitnessFormat, RejectsMalformedLines) {
  EXPECT_THROW(parse_witness("MODEL"), ParseError);
  EXPECT_THROW(parse_witness("WITNESS"), ParseError);
  EXPECT_THROW(parse_witness("WITNESS Triangle 0 1 2"), ParseError);
  EXPECT_THROW(parse_witness("WITNESS Claw 0 1 a 3"), ParseError);
  EXPECT_THROW(parse_witness("WITNESS Claw 0 1 -2 3"), ParseError);
}

TEST(FatW5Format, RoundTrips) {
  FatW5 f;
  Graph g = tg::fat_w5({2, 1, 1, 3, 1}, 2, &f);
  std::ostringstream out;
  write_fat_w5(out, f);
  std::istringstream in(out.str());
  FatW5 back = read_fat_w5(in);
  EXPECT_EQ(back, f);
  EXPECT_TRUE(verify_fat_w5(g, back));
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
}

TEST(FatW5Format, RejectsWrongLabels) {
  std::istringstream short_in("CLASS 0: 1\nCLASS 1: 2\n");
  EXPECT_THROW(read_fat_w5(short_in), ParseError);
  std::istringstream bad("CLASS 1: 1\n");
  EXPECT_THROW(read_fat_w5(bad), ParseError);
  std::istringstream junk("CLASS 0: 1 x\n");
  EXPECT_THROW(read_fat_w5(junk), ParseError);
}
