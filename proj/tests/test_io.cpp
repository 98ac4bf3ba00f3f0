#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "taugraph/io.hpp"

using namespace taugraph;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const auto g = parse("# a path\n\n4\n0 1\n  # inner\n1 2\n2\t3\n");
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.size(), 3U);
  EXPECT_TRUE(g.adjacent(2, 3));
}

TEST(EdgeList, GoldenPathFile) {
  const auto g = read_edge_list_file(std::filesystem::path(TAUGRAPH_GOLDEN_DIR) / "p4.txt");
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3\n0 1\n0 1\n"), 3U);
  EXPECT_EQ(error_line("3\n0 1\n1 1\n"), 3U);
  EXPECT_EQ(error_line("3\n0 5\n"), 2U);
  EXPECT_EQ(error_line("# c\nx\n"), 2U);
  EXPECT_EQ(error_line("3\n0 1 2\n"), 2U);
  EXPECT_EQ(error_line("3\n0\n"), 2U);
  EXPECT_EQ(error_line("3\n-1 2\n"), 2U);
  EXPECT_EQ(error_line("99\n"), 1U);
}

TEST(EdgeList, DuplicateInEitherOrientation) {
  try {
    parse("3\n0 1\n1 0\n");
    FAIL() << "duplicate accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate edge (0,1)"), std::string::npos);
  }
}

TEST(EdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("# only comments\n\n"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  const auto g = Graph::from_edges(5, {{0, 4}, {1, 2}, {2, 4}});
  const auto text = edge_list_string(g);
  EXPECT_EQ(text, "5\n0 4\n1 2\n2 4\n");
  EXPECT_EQ(parse(text), g);
  std::ostringstream out;
  write_edge_list(out, g, {"hello"});
  EXPECT_EQ(out.str().rfind("# hello\n", 0), 0U);
  EXPECT_EQ(parse(out.str()), g);
}

TEST(EdgeList, AtomicWriteLeavesNoTemporary) {
  const auto dir = std::filesystem::temp_directory_path() / "taugraph_io_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "out.txt";
  write_file_atomically(file, "abc\n");
  std::ifstream in(file);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "abc");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  EXPECT_THROW(write_file_atomically(dir / "missing" / "x.txt", "x"), std::runtime_error);
  EXPECT_FALSE(std::filesystem::exists(dir / "missing"));
  std::filesystem::remove_all(dir);
}
