#include <gtest/gtest.h>

#include <sstream>

#include "taugraph/verify.hpp"

using namespace taugraph;

namespace {

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const CheckResult* find(const std::vector<CheckResult>& results, const std::string& name) {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST(Verify, PassesAtOrderEight) {
  VerifyOptions opt;
  opt.limits = {8, 8, 8, 8};
  const auto results = run_verification(opt);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GE(results.size(), 15U);
}

TEST(Verify, TrivialAtOrderThree) {
  VerifyOptions opt;
  opt.limits = {3, 3, 3, 3};
  EXPECT_TRUE(all_pass(run_verification(opt)));
}

TEST(Verify, CorruptedU2IsCaught) {
  VerifyOptions opt;
  opt.limits = {7, 7, 7, 8};
  opt.build = corrupted_u2;
  const auto results = run_verification(opt);
  EXPECT_FALSE(all_pass(results));
  const auto* ids = find(results, "family identities");
  ASSERT_NE(ids, nullptr);
  EXPECT_FALSE(ids->passed);
  ASSERT_FALSE(ids->failures.empty());
  EXPECT_NE(ids->failures.front().find("U2 - (0,1) ~ P_{n-1} plus pendant at second vertex"), std::string::npos);
  std::ostringstream report;
  write_verification_report(report, results);
  EXPECT_NE(report.str().find("FAIL  family identities"), std::string::npos);
}

TEST(Verify, ReportIsDeterministic) {
  VerifyOptions opt;
  opt.limits = {6, 6, 6, 6};
  std::ostringstream a;
  std::ostringstream b;
  write_verification_report(a, run_verification(opt));
  opt.threads = 3;
  write_verification_report(b, run_verification(opt));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Verify, UnicyclicTheoremFailsAtOrderFour) {
  Corpus corpus;
  const auto r = check_unicyclic_extremality(corpus, 4, 6);
  EXPECT_FALSE(r.passed);
  for (const auto& f : r.failures) EXPECT_EQ(f.rfind("n=4:", 0), 0U) << f;
  EXPECT_TRUE(check_unicyclic_extremality(corpus, 5, 9).passed);
  EXPECT_TRUE(check_unicyclic_order4_exception(corpus).passed);
}

TEST(Verify, HalfPendantUniquenessFailsFromOrderEight) {
  Corpus corpus;
  EXPECT_TRUE(check_half_pendant_uniqueness(corpus, 6, 6).passed);
  const auto r = check_half_pendant_uniqueness(corpus, 6, 12);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failure_count, 3U);
  EXPECT_TRUE(check_half_pendant_structure(corpus, 6, 12).passed);
}

TEST(Verify, StructuralLemmasOnTreesUpToTen) {
  Corpus corpus;
  EXPECT_TRUE(check_structural_lemmas(corpus, 10, 8).passed);
}

TEST(Verify, RegularIdentity) { EXPECT_TRUE(check_regular_identity(8).passed); }

TEST(Verify, ValidSpecsCoverEveryFamily) {
  const auto specs = valid_specs(8);
  for (auto id : kAllFamilies) {
    bool seen = false;
    for (const auto& s : specs) seen |= s.id == id;
    EXPECT_TRUE(seen) << to_string(id);
  }
}
