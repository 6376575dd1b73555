#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "common.hpp"
#include "knotoid/pipeline.hpp"
#include "knotoid/structure.hpp"

namespace {

using namespace knotoid;

const std::vector<CensusRecord>& small_census() {
  static const std::vector<CensusRecord> records = classify(ClassifyParams::defaults(3));
  return records;
}

std::string serialized(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  write_census(out, records);
  return out.str();
}

TEST(Classify, ThreeCrossingRows) {
  std::vector<ClassifyLog> logs;
  const auto records = classify(ClassifyParams::defaults(3), [&](const ClassifyLog& l) { logs.push_back(l); });
  EXPECT_EQ(serialized(records), serialized(small_census()));
  ASSERT_EQ(logs.size(), 4u);
  const auto rows = report_census(records);
  ASSERT_EQ(rows.size(), 4u);
  const std::size_t total[] = {1, 0, 1, 2}, chiral[] = {0, 0, 1, 2}, rotatable[] = {1, 0, 0, 1};
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(rows[n].crossings, n);
    EXPECT_EQ(rows[n].total, total[n]) << n;
    EXPECT_EQ(rows[n].chiral_yes, chiral[n]) << n;
    EXPECT_EQ(rows[n].rotatable_yes, rotatable[n]) << n;
    EXPECT_EQ(rows[n].possible_duplicates, 0u);
    EXPECT_EQ(logs[n].records, total[n]);
  }
}

TEST(Classify, RecordsMatchAppendixEntries) {
  // Each record is one of the listed knotoids or its mirror image.
  std::set<std::string> names;
  for (const CensusRecord& r : small_census()) {
    const Diagram d = parse_em(r.em);
    const auto sig = signature(d), msig = signature(mirror(d));
    EXPECT_EQ(r.signature, sig);
    EXPECT_EQ(canonical_code(parse_pd(r.pd)), canonical_code(d));
    for (const FixtureEntry& e : testing_support::appendix())
      if (e.crossings == r.crossings && (e.expected == sig || e.expected == msig)) names.insert(e.name);
    EXPECT_TRUE(is_prime(d));
  }
  EXPECT_EQ(names, (std::set<std::string>{"K0_1", "K2_1", "K3_1", "K3_2"}));
}

TEST(Classify, RejectsBadParameters) {
  ClassifyParams p = ClassifyParams::defaults(2);
  p.workers = 0;
  EXPECT_THROW(classify(p), std::invalid_argument);
  p = ClassifyParams::defaults(2);
  p.reduce_stages[0].max_states = 0;
  EXPECT_THROW(classify(p), std::invalid_argument);
}

TEST(Census, PersistAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "knotoid_pipeline_test.jsonl";
  persist(small_census(), path.string());
  const auto back = load(path.string());
  EXPECT_EQ(back, small_census());
  std::filesystem::remove(path);
  EXPECT_THROW(load(path.string()), IoError);
}

TEST(Census, VersionMismatch) {
  std::string text = serialized(small_census());
  const std::string key = "\"schema_version\":" + std::to_string(kCensusSchemaVersion);
  const auto at = text.find(key);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, key.size(), "\"schema_version\":" + std::to_string(kCensusSchemaVersion + 1));
  std::istringstream in(text);
  EXPECT_THROW(read_census(in), VersionMismatch);
}

TEST(Census, MalformedInput) {
  std::istringstream empty("");
  EXPECT_THROW(read_census(empty), IoError);
  std::string text = serialized(small_census());
  text.resize(text.size() - 20);
  std::istringstream cut(text);
  EXPECT_THROW(read_census(cut), IoError);
}

TEST(Fixtures, TrivialEntryVerifies) {
  const FixtureReport r = verify_fixtures({testing_support::entry("K0_1")});
  EXPECT_EQ(r.entries, 1u);
  for (std::size_t m : r.matched) EXPECT_EQ(m, 1u);
  EXPECT_EQ(r.codes_matched, 1u);
}

TEST(Fixtures, CorruptedValueIsReported) {
  FixtureEntry e = testing_support::entry("K2_1");
  e.expected.bracket = "A^{8} + A^{6} - A^{3}";
  const FixtureReport r = verify_fixtures({e});
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches[0].name, "K2_1");
  EXPECT_EQ(r.mismatches[0].invariant, "bracket");
  EXPECT_EQ(r.mismatches[0].computed, testing_support::entry("K2_1").expected.bracket);
  EXPECT_EQ(r.matched[0], 0u);
  EXPECT_EQ(r.matched[1], 1u);
  EXPECT_FALSE(r.all_matched());
}

TEST(Fixtures, ParseErrorsCarryTheLine) {
  std::istringstream in("\n{\"name\": \"X\"}\n");
  try {
    read_fixtures(in);
    FAIL() << "accepted";
  } catch (const FixtureParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Report, UniquenessRows) {
  const auto rows = report_uniqueness(small_census());
  ASSERT_EQ(rows.size(), 6u);
  for (const UniquenessRow& r : rows) EXPECT_LE(r.unique, small_census().size());
  // The last row takes all five together, which separate these records.
  EXPECT_EQ(rows.back().unique, small_census().size());
  const std::string table = format_uniqueness(rows, small_census().size());
  EXPECT_NE(table.find("bracket"), std::string::npos);
  EXPECT_NE(format_census(report_census(small_census())).find("3"), std::string::npos);
}

TEST(Report, ParallelClassifyIsIdentical) {
  ClassifyParams p = ClassifyParams::defaults(3);
  p.workers = 4;
  EXPECT_EQ(serialized(classify(p)), serialized(small_census()));
}

}  // namespace
