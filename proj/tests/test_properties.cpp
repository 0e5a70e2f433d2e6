#include <gtest/gtest.h>

#include <cctype>
#include <set>

#include "properties.hpp"

class Properties : public ::testing::TestWithParam<props::Suite> {};

TEST_P(Properties, HoldOnCorpus) {
  const props::Outcome o = GetParam().run();
  EXPECT_GT(o.checked, 0u);
  EXPECT_EQ(o.failed, 0u) << o.failed << "/" << o.checked << " failed, first: " << o.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Properties, ::testing::ValuesIn(props::suites()),
                         [](const ::testing::TestParamInfo<props::Suite>& info) {
                           std::string n;
                           for (char c : info.param.name) n += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return std::to_string(info.index) + "_" + n;
                         });

TEST(Corpus, DeterministicAndMixed) {
  const auto a = corpus::make_corpus(props::kCorpusSeed, 20);
  const auto b = corpus::make_corpus(props::kCorpusSeed, 20);
  EXPECT_EQ(a, b);
  std::set<int> mus;
  for (const auto& x : props::corpus()) mus.insert(x.mu());
  EXPECT_EQ(mus, (std::set<int>{3, 4, 5}));
  EXPECT_EQ(props::corpus().size(), props::kCorpusSize);
}

TEST(Corpus, EmbeddedSPlusIsNotSphericalAtFive) {
  const auto sp = props::s_plus(5);
  EXPECT_EQ(gentle::rhom_dims(sp, sp), (gentle::GradedDims{{0, 1}, {3, 1}}));
  bool serre_fails = false;
  for (const auto& x : props::corpus())
    if (x.mu() == 5 && gentle::rhom_dims(x, sp) != gentle::rhom_dims(sp, x).translated(-3).dual()) serre_fails = true;
  EXPECT_TRUE(serre_fails);
}
