#include <doctest.h>

#include <sstream>

#include "lagmat/io.hpp"

using namespace lagmat;

namespace {

MatrixDocument parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_document(in);
}

}  // namespace

TEST_CASE("documents with an explicit right block") {
  const auto doc = parse(
      "field Q\n"
      "n 3\n"
      "left\n"
      "1 0 0\n"
      "0 1 0\n"
      "0 0 1\n"
      "right\n"
      "-1 -1 -1\n"
      "-1 -1 -1\n"
      "-1 -1 -1\n");
  CHECK(doc.field == MatrixDocument::Field::Q);
  CHECK(doc.n == 3);
  REQUIRE(doc.rat.has_value());
  CHECK(doc.rat->right.at(0, 0) == -1);
}

TEST_CASE("the right block defaults to the identity") {
  const auto doc = parse(
      "field Q\n"
      "n 2\n"
      "# symmetric shorthand\n"
      "left\n"
      "0 1\n"
      "1 0\n");
  REQUIRE(doc.rat.has_value());
  CHECK(doc.rat->right == QMatrix::identity(2));
}

TEST_CASE("rational entries accept fractions") {
  const auto doc = parse(
      "field Q\n"
      "n 2\n"
      "left\n"
      "1/2 0\n"
      "0 -3/4\n");
  CHECK(doc.rat->left.at(1, 1) == Rat(-3, 4));
}

TEST_CASE("GF(2) documents") {
  const auto doc = parse(
      "field GF2\n"
      "n 2\n"
      "left\n"
      "0 1\n"
      "1 0\n");
  CHECK(doc.field == MatrixDocument::Field::GF2);
  REQUIRE(doc.gf2.has_value());
  CHECK_THROWS_AS(doc.rational(), domain_error);
}

TEST_CASE("parse errors name the defect") {
  CHECK_THROWS_AS(parse("field R\nn 2\nleft\n1 0\n0 1\n"), parse_error);
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n1 0 0\n0 1 0\n"), parse_error);
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n1 x\n0 1\n"), parse_error);
  CHECK_THROWS_AS(parse("field GF2\nn 2\nleft\n2 0\n0 1\n"), parse_error);
  CHECK_THROWS_AS(parse("n 2\nfield Q\nleft\n1 0\n0 1\n"), parse_error);
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n1 0\n0 1\nextra\n"), parse_error);
}

TEST_CASE("representation invariants surface as domain errors") {
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n0 1\n2 0\n"), domain_error);
  CHECK_THROWS_AS(parse("field Q\nn 2\nleft\n0 0\n0 0\nright\n0 0\n0 0\n"),
                  domain_error);
}

TEST_CASE("missing files are I/O errors") {
  CHECK_THROWS_AS(load_matrix_document("/nonexistent/x.mat"), parse_error);
}
