#include "wigosc/table.hpp"

#include <json.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace wigosc;

TEST(Table, CsvRoundTripIsExact) {
  Table t;
  t.meta = {{"command", "survival"}, {"version", kLibraryVersion}};
  t.columns = {"omega_t[rad]", "survival[1]"};
  t.add_row({0.0, 1.0});
  t.add_row({M_PI, 1.0 / 3.0});
  t.add_row({1e-300, -2.5e17});
  std::stringstream ss;
  write_csv(ss, t);
  const Table back = read_csv(ss);
  EXPECT_EQ(back.meta, t.meta);
  EXPECT_EQ(back.columns, t.columns);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(back.rows[i], t.rows[i]);
  EXPECT_EQ(back.meta_value("command"), "survival");
  EXPECT_EQ(back.meta_value("missing"), "");
}

TEST(Table, SeventeenSignificantDigits) {
  Table t;
  t.columns = {"v"};
  t.add_row({0.1});
  std::stringstream ss;
  write_csv(ss, t);
  EXPECT_NE(ss.str().find("1.0000000000000001e-01"), std::string::npos) << ss.str();
}

TEST(Table, RejectsMalformed) {
  std::stringstream ragged("a,b\n1,2\n3\n");
  EXPECT_THROW(read_csv(ragged), std::invalid_argument);
  std::stringstream bad("a\nxyz\n");
  EXPECT_THROW(read_csv(bad), std::invalid_argument);
  std::stringstream empty("# k=v\n");
  EXPECT_THROW(read_csv(empty), std::invalid_argument);
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
}

TEST(Table, JsonHasSameFields) {
  Table t;
  t.meta = {{"seed", "42"}};
  t.columns = {"x", "y"};
  t.add_row({1.5, -2.0});
  std::stringstream ss;
  write_json(ss, t);
  const auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j["meta"]["seed"], "42");
  EXPECT_EQ(j["columns"][1], "y");
  EXPECT_DOUBLE_EQ(j["rows"][0][0].get<double>(), 1.5);
}
