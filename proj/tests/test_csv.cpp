#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pbsim/csv.hpp"

using namespace pbsim;

TEST_CASE("doubles render at the requested precision") {
  CHECK(format_double(0.08, 12) == "0.08");
  CHECK(format_double(1.0 / 3.0, 3) == "0.333");
  CHECK(format_double(-5.192582403567252, 16) == "-5.192582403567252");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1e-300, 6) == "1e-300");
}

TEST_CASE("fields with separators are quoted") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("tables round-trip through render and parse") {
  const std::vector<std::string> cols{"delta_c", "g2_0"};
  const std::vector<std::vector<double>> rows{
      {-8.0, 1.25},
      {0.5, std::numeric_limits<double>::quiet_NaN()},
      {8.0, 3.5e-7},
  };
  const std::string text = render_csv(cols, rows, 12);
  const CsvTable table = parse_csv(text);
  CHECK(table.columns == cols);
  REQUIRE(table.rows.size() == rows.size());
  CHECK(table.rows[0][0] == -8.0);
  CHECK(table.rows[0][1] == 1.25);
  CHECK(std::isnan(table.rows[1][1]));
  CHECK(table.rows[2][1] == doctest::Approx(3.5e-7).epsilon(1e-12));
}

TEST_CASE("renderer rejects ragged rows") {
  CHECK_THROWS_AS(render_csv({"a", "b"}, {{1.0}}, 12), std::invalid_argument);
}

TEST_CASE("parser rejects malformed tables") {
  CHECK_THROWS_AS(parse_csv(""), std::runtime_error);
  CHECK_THROWS_AS(parse_csv("a,b\n1.0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv("a,b\n1.0,zebra\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv("a,b\n\"1.0,2.0\n"), std::runtime_error);
}

TEST_CASE("parser tolerates blank lines and CRLF endings") {
  const CsvTable table = parse_csv("a,b\r\n\r\n1.0,2.0\r\n\n3.0,4.0");
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0][0] == 1.0);
  CHECK(table.rows[1][1] == 4.0);
}

TEST_CASE("atomic writes land complete files and clean up") {
  const std::string path = "test_atomic_write.csv";
  write_file_atomic(path, "a,b\n1,2\n");
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "a,b\n1,2\n");
  }
  // overwrite replaces content atomically
  write_file_atomic(path, "c\n3\n");
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "c\n3\n");
  }
  CHECK_FALSE(std::ifstream(path + ".tmp").good());
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_file_atomic("no_such_dir/x.csv", "x"), std::runtime_error);
}
