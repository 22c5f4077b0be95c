#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "qfriction/constants.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/table.hpp"
#include "qfriction/units.hpp"

using namespace qfriction;

TEST_CASE("unit parsing") {
  CHECK(parse_frequency("646THz") == doctest::Approx(2.0 * kPi * 646e12));
  CHECK(parse_frequency("4.06e15rad/s") == 4.06e15);
  CHECK(parse_distance("3nm") == doctest::Approx(3e-9));
  CHECK(parse_distance("3e-9m") == 3e-9);
  CHECK(parse_velocity("0.273c") == doctest::Approx(0.273 * PhysicalConstants::c));
  CHECK(parse_velocity("8.2e7m/s") == 8.2e7);
  CHECK(parse_velocity("-0.1c") == doctest::Approx(-0.1 * PhysicalConstants::c));
  CHECK(parse_dipole("1e-29Cm") == 1e-29);
  CHECK(parse_dipole("2e-29") == 2e-29);

  for (const char* bad : {"646", "646GHz", "THz", "abcTHz", ""}) CHECK_THROWS_AS(parse_frequency(bad), UsageError);
  CHECK_THROWS_AS(parse_distance("3"), UsageError);
  CHECK_THROWS_AS(parse_distance("3mm"), UsageError);
  CHECK_THROWS_AS(parse_velocity("0.1"), UsageError);
  CHECK_THROWS_AS(parse_dipole("1e-29Debye"), UsageError);
}

TEST_CASE("doubles round-trip with 17 significant digits") {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -1.6e-19, 5e-324, 0.0}) {
    const auto text = format_double(x);
    CHECK(std::strtod(text.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.5) == "5.0000000000000000e-01");
}

TEST_CASE("CSV and JSON writers") {
  Table table{{"name", "x", "n"}, {}};
  table.add_row({std::string("first"), 0.25, 3L});
  table.add_row({std::string("second"), std::monostate{}, 4L});
  CHECK_THROWS(table.add_row({1.0}));

  std::ostringstream csv;
  write_table(csv, table, OutputFormat::csv);
  CHECK(csv.str() == "name,x,n\nfirst,2.5000000000000000e-01,3\nsecond,,4\n");

  std::ostringstream json;
  write_table(json, table, OutputFormat::json);
  const auto doc = nlohmann::json::parse(json.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["x"].get<double>() == 0.25);
  CHECK(doc[1]["x"].is_null());
  CHECK(doc[1]["n"].get<long>() == 4);
  // Keys keep column order.
  CHECK(json.str().find("\"name\"") < json.str().find("\"x\""));

  std::ostringstream again;
  write_table(again, table, OutputFormat::json);
  CHECK(again.str() == json.str());

  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}
