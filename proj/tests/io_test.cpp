#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "gelab/io.hpp"
#include "support/corpus.hpp"

namespace gelab {
namespace {

Graph parse(const std::string& text, io::GraphFormat f = io::GraphFormat::automatic) {
  std::istringstream in(text);
  return io::read_graph(in, f);
}

io::DistributionFile dist(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  return io::read_distribution(in, n);
}

TEST(RationalParseTest, Forms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+07/08"), Rational(7, 8));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("1.5e-2"), Rational(3, 200));
  EXPECT_EQ(parse_rational("2E3"), Rational(2000));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  for (const char* bad : {"", "1/", "/2", "1/-2", "1.2.3", "e5", "1e", "abc", "1/0"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(EdgeListTest, Parses) {
  EXPECT_EQ(parse("# five cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n"), testing::cycle(5));
  EXPECT_EQ(parse("n 4\n0 1\n"), [] {
    Graph g(4);
    g.add_edge(0, 1);
    return g;
  }());
  EXPECT_EQ(parse("n 1\n"), Graph(1));
  EXPECT_EQ(parse(""), Graph(0));
  EXPECT_EQ(parse("0 1  # trailing comment\n1 0\n"), testing::complete(2));
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_THROW(parse("0 x\n"), ParseError);
  EXPECT_THROW(parse("0 1 2\n"), ParseError);
  EXPECT_THROW(parse("n 2\n0 5\n"), ParseError);
  EXPECT_THROW(parse("n 2\nn 3\n"), ParseError);
  EXPECT_THROW(parse("0 64\n"), ParseError);
  try {
    parse("0 1\n1 -2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(DimacsTest, Parses) {
  EXPECT_EQ(parse("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"), testing::complete(3));
  EXPECT_EQ(parse("p col 2 0\n"), Graph(2));
  EXPECT_EQ(parse("p edge 2 1\ne 1 2\n", io::GraphFormat::dimacs), testing::complete(2));
}

TEST(DimacsTest, Errors) {
  EXPECT_THROW(parse("e 1 2\n", io::GraphFormat::dimacs), ParseError);
  EXPECT_THROW(parse("p edge 2 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse("p edge 2\n"), ParseError);
  EXPECT_THROW(parse("p edge 2 1\nx\n"), ParseError);
  EXPECT_THROW(parse("c only comments\n", io::GraphFormat::dimacs), ParseError);
}

TEST(FormatTest, Names) {
  EXPECT_EQ(io::parse_format("auto"), io::GraphFormat::automatic);
  EXPECT_EQ(io::parse_format("edge-list"), io::GraphFormat::edge_list);
  EXPECT_EQ(io::parse_format("dimacs"), io::GraphFormat::dimacs);
  EXPECT_THROW(io::parse_format("graphml"), ParseError);
  EXPECT_EQ(io::detect_format("c x\np edge 1 0\n"), io::GraphFormat::dimacs);
  EXPECT_EQ(io::detect_format("# x\n0 1\n"), io::GraphFormat::edge_list);
}

TEST(DistributionFileTest, Fractions) {
  auto d = dist("0 1/3\n1 2/3\n", 2);
  EXPECT_EQ(d.distribution, Distribution({Rational(1, 3), Rational(2, 3)}));
  EXPECT_FALSE(d.renormalized);

  auto sparse = dist("# point mass\n2 1\n", 4);
  EXPECT_EQ(sparse.distribution, Distribution::point_mass(4, 2));
}

TEST(DistributionFileTest, DecimalsAreExactAndRenormalized) {
  auto exact = dist("0 0.25\n1 0.75\n", 2);
  EXPECT_EQ(exact.distribution, Distribution({Rational(1, 4), Rational(3, 4)}));
  EXPECT_FALSE(exact.renormalized);

  auto thirds = dist("0 0.3333\n1 0.3333\n2 0.3333\n", 3);
  EXPECT_EQ(thirds.distribution, Distribution::uniform(3));
  EXPECT_TRUE(thirds.renormalized);

  auto padded = dist("0 010/040\n1 0.750\n", 2);
  EXPECT_EQ(padded.distribution, Distribution({Rational(1, 4), Rational(3, 4)}));

  auto sci = dist("0 5e-1\n1 0.5\n", 2);
  EXPECT_EQ(sci.distribution, Distribution::uniform(2));
}

TEST(DistributionFileTest, Errors) {
  EXPECT_THROW(dist("0 1/3\n1 1/3\n", 2), ParseError);
  EXPECT_THROW(dist("0 -1/2\n1 3/2\n", 2), ParseError);
  EXPECT_THROW(dist("0 1\n0 0\n", 2), ParseError);
  EXPECT_THROW(dist("3 1\n", 2), ParseError);
  EXPECT_THROW(dist("0 1/0\n", 2), ParseError);
  EXPECT_THROW(dist("0 abc\n", 2), ParseError);
  EXPECT_THROW(dist("0 0.0\n", 2), ParseError);
  EXPECT_THROW(dist("", 2), ParseError);
}

TEST(IoProperty, EdgeListRoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_graph(rng, rng() % 40, 0.3);
    std::ostringstream out;
    io::write_edge_list(out, g, {"round trip"});
    EXPECT_EQ(parse(out.str()), g);
    EXPECT_EQ(parse(out.str(), io::GraphFormat::edge_list), g);
  }
}

}  // namespace
}  // namespace gelab
