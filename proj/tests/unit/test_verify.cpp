#include <set>

#include <gtest/gtest.h>

#include "symdg/verify.hpp"

using namespace symdg;

namespace {

VerifyOptions small_options()
{
  VerifyOptions o;
  o.s_values = {2, 3};
  o.rep_pairs = 2000;
  o.kronecker_trials = 20;
  return o;
}

std::set<std::string> ids_of(VerificationReport const &r)
{
  std::set<std::string> out;
  for (auto const &c : r.claims)
    out.insert(c.id);
  return out;
}

} // namespace

TEST(Verify, GammaScopePasses)
{
  auto const report = run_verification(small_options(), "gamma");
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(report.count(ClaimStatus::Fail), 0u);
  ASSERT_NE(report.find("gamma.s2.rep_multiplicative"), nullptr);
  EXPECT_EQ(report.find("gamma.s2.rep_multiplicative")->status, ClaimStatus::Discrepancy);
  EXPECT_EQ(report.find("gamma.s3.rep_multiplicative")->status, ClaimStatus::Pass);
  EXPECT_EQ(report.find("gamma.s3.not_diagonalizable")->status, ClaimStatus::Pass);
}

TEST(Verify, RegistryMatchesEmittedIds)
{
  for (std::string const scope : {"gamma", "kronecker"}) {
    auto const options = small_options();
    auto const report = run_verification(options, scope);
    auto const registry = claim_registry(options, scope);
    EXPECT_EQ(ids_of(report), std::set<std::string>(registry.begin(), registry.end())) << scope;
    EXPECT_EQ(report.claims.size(), registry.size()) << scope;
  }
}

TEST(Verify, Deterministic)
{
  auto const options = small_options();
  auto const first = run_verification(options, "kronecker").to_json(false).dump();
  auto const second = run_verification(options, "kronecker").to_json(false).dump();
  EXPECT_EQ(first, second);
}

TEST(Verify, ParallelMatchesSerial)
{
  auto options = small_options();
  auto const serial = run_verification(options, "gamma").to_json(false);
  options.jobs = 3;
  EXPECT_EQ(run_verification(options, "gamma").to_json(false).at("claims"), serial.at("claims"));
}

TEST(Verify, InjectedFaultFails)
{
  auto options = small_options();
  options.s_values = {2};
  options.inject_fault = true;
  auto const report = run_verification(options, "gamma");
  EXPECT_FALSE(report.passed());
  auto const failing = report.failing_ids();
  EXPECT_NE(std::find(failing.begin(), failing.end(), "gamma.s2.s_arc_transitive"), failing.end());
}

TEST(Verify, ControlsAlwaysRun)
{
  auto const report = run_verification(small_options(), "kronecker");
  for (char const *id : {"control.directed_cycles_diagonalizable", "control.nilpotent_not_diagonalizable",
                         "control.corrupted_witness_rejected", "control.fabricated_table_row"}) {
    ASSERT_NE(report.find(id), nullptr) << id;
    EXPECT_EQ(report.find(id)->status, ClaimStatus::Pass) << id;
  }
}

TEST(Verify, ResourceBoundSkips)
{
  auto options = small_options();
  options.s_values = {3};
  options.enumeration_bound = 100;
  auto const report = run_verification(options, "gamma");
  EXPECT_GT(report.count(ClaimStatus::Skipped), 0u);
  EXPECT_EQ(report.count(ClaimStatus::Fail), 0u);
}

TEST(Verify, ReportShape)
{
  auto const report = run_verification(small_options(), "kronecker");
  Json const j = report.to_json();
  EXPECT_EQ(j.at("schema"), "symdg-report/1");
  EXPECT_EQ(j.at("summary").at("fail"), 0);
  EXPECT_NE(report.to_text().find("[PASS] "), std::string::npos);
}

TEST(Verify, UnknownScopeThrows)
{
  EXPECT_THROW(run_verification(small_options(), "everything"), DomainError);
}
