#include <gtest/gtest.h>

#include "pascal2/report.hpp"

using namespace pascal2;

namespace {

Report sample() {
  Report r;
  r.suite = "demo";
  r.params = {{"nmax", "16"}, {"note", "a b|c"}};
  r.add("B1", {{"n", "3"}}, true, "15", "15");
  r.add("A2", {{"n", "4"}, {"t", "2"}}, false, "1 + z", "weird | value\nwith \\ escapes");
  r.add("A1", {}, true, "", "x");
  return r;
}

}  // namespace

TEST(Report, StatusIsConjunction) {
  Report r = sample();
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.failures(), 1U);
  r.checks.erase(r.checks.begin() + 1);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(Report{}.pass());
}

TEST(Report, SortedById) {
  const Report r = sample().sorted();
  ASSERT_EQ(r.checks.size(), 3U);
  EXPECT_EQ(r.checks[0].id, "A1");
  EXPECT_EQ(r.checks[1].id, "A2");
  EXPECT_EQ(r.checks[2].id, "B1");
}

TEST(Report, TextRoundTrip) {
  const Report r = sample();
  const std::string text = to_text(r);
  EXPECT_NE(text.find("status: FAIL (3 checks, 1 failed)"), std::string::npos);
  EXPECT_EQ(report_from_text(text), r.sorted());
}

TEST(Report, JsonRoundTrip) {
  const Report r = sample();
  EXPECT_EQ(report_from_json(to_json(r)), r.sorted());
  EXPECT_EQ(report_from_json(to_json(r)), report_from_text(to_text(r)));
}

TEST(Report, RejectsInconsistentStatus) {
  std::string text = to_text(sample());
  text.replace(text.find("status: FAIL"), 12, "status: PASS");
  EXPECT_THROW(report_from_text(text), std::invalid_argument);
  std::string json = to_json(sample());
  const auto at = json.rfind("\"pass\": false");
  json.replace(at, 13, "\"pass\": true");
  EXPECT_THROW(report_from_json(json), std::invalid_argument);
  EXPECT_THROW(report_from_json("{"), std::invalid_argument);
  EXPECT_THROW(report_from_text("suite: x\nparams: \nPASS | a\n"), std::invalid_argument);
  EXPECT_THROW(report_from_text(""), std::invalid_argument);
}

TEST(Report, AbbreviatesPassingWitnesses) {
  const std::string big(200, '7');
  Report r;
  r.add("X", {}, true, big, big);
  r.add("Y", {}, false, big, big + "1");
  EXPECT_LE(r.checks[0].lhs.size(), 64U);
  EXPECT_NE(r.checks[0].lhs.find("(200 chars)"), std::string::npos);
  EXPECT_EQ(r.checks[1].lhs, big);
  EXPECT_EQ(abbreviate("short"), "short");
}
