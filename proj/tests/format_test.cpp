#include <gtest/gtest.h>

#include "oscilspec/errors.hpp"
#include "oscilspec_cli/format.hpp"

using namespace oscilspec::cli;

namespace {
Report sample() {
  Report r;
  r.title = "demo";
  r.columns = {{"potential"}, {"level", true}, {"energy", false, true}};
  r.rows = {{"A", "0", "-2.000000000000000000"}, {"C, x", "3", "13.880516236713881902"}};
  r.notes = {"one note"};
  return r;
}
}  // namespace

TEST(GroupDigits, TypesetLikeAPrintedTable) {
  EXPECT_EQ(group_digits("-2.000000000000000000"), "−2.000 000 000 000 000 000");
  EXPECT_EQ(group_digits("13.88051623671388190"), "13.880 516 236 713 881 90");
  EXPECT_EQ(group_digits("7"), "7");
}

TEST(Render, TableAlignsAndGroups) {
  const auto text = render_table(sample());
  EXPECT_NE(text.find("−2.000 000 000"), std::string::npos);
  EXPECT_NE(text.find("note: one note"), std::string::npos);
  EXPECT_EQ(text.rfind("demo\n", 0), 0u);
}

TEST(Render, CsvQuotesAndHeader) {
  const auto text = render_csv(sample());
  EXPECT_EQ(text, "potential,level,energy\nA,0,-2.000000000000000000\n\"C, x\",3,13.880516236713881902\n");
}

TEST(Render, JsonRoundTripIsIdentical) {
  const auto first = render_json(sample());
  const auto parsed = parse_json_report(first);
  EXPECT_EQ(render_json(parsed), first);
  EXPECT_EQ(parsed.rows[1][2], "13.880516236713881902");
  EXPECT_NE(first.find("\"level\": 3"), std::string::npos);
}

TEST(Render, FormatNames) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("table"), OutputFormat::Table);
  EXPECT_THROW(parse_format("xml"), oscilspec::ParseError);
}
