#include <gtest/gtest.h>

#include "neartsp/instance_io.hpp"

using namespace neartsp;

TEST(InstanceIo, ParsesCommentsAndBlankLines) {
  auto g = parse_instance("# four vertices\n4\n\n1 5 1  # row 0\n1 1\n1\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g(0, 2), 5);
  EXPECT_EQ(g(2, 0), 5);
  EXPECT_EQ(g(3, 2), 1);
}

TEST(InstanceIo, RoundTrip) {
  auto g = parse_instance("4\n1 5 1\n1 1\n1\n");
  EXPECT_EQ(format_instance(g), "4\n1 5 1\n1 1\n1\n");
  EXPECT_EQ(parse_instance(format_instance(g)), g);
  EXPECT_EQ(format_instance(parse_instance("1\n")), "1\n");
}

TEST(InstanceIo, RejectsMalformedInput) {
  auto kind_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  EXPECT_EQ(kind_of(""), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n1 2\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n1 2 3\n4\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n1 x\n4\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n1 -2\n4\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n1 2\n4\n5\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("0\n"), ErrorKind::ParseError);
}
