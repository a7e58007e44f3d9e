#include <gtest/gtest.h>

#include "json.hpp"
#include "support/scratch.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = DEFEASOR_TEST_CORPUS_DIR;

scratch::Run cli(const std::string& args) { return scratch::run(std::string("'") + DEFEASOR_CLI_PATH + "' " + args + " 2>&1"); }

std::string in_corpus(const std::string& rel) { return scratch::quote(kCorpus / rel); }

}  // namespace

TEST(Cli, SemanticsChain) {
  scratch::TempDir tmp("cli");
  scratch::spit(tmp.path() / "chain.af", "arg(A).\narg(B).\narg(C).\natt(B,A).\natt(C,B).\n");
  const auto r = cli("semantics " + scratch::quote(tmp.path() / "chain.af"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{A, C}\n");
}

TEST(Cli, SemanticsLarryPreferred) {
  const auto r = cli("semantics " + in_corpus("larry_four_cycle/framework.af") + " --semantics preferred");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{A, C}\n{B, D}\n");
}

TEST(Cli, SemanticsEmptyFile) {
  scratch::TempDir tmp("cli");
  scratch::spit(tmp.path() / "empty.af", "");
  const auto r = cli("semantics " + scratch::quote(tmp.path() / "empty.af"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{}\n");
}

TEST(Cli, ParseErrorIsLineNumbered) {
  scratch::TempDir tmp("cli");
  scratch::spit(tmp.path() / "bad.af", "arg(A).\n\natt(A,Q).\n");
  const auto r = cli("semantics " + scratch::quote(tmp.path() / "bad.af"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, BuildTweety) {
  const auto r = cli("build " + in_corpus("tweety_magic_penguin/rulebase.rb"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("att(r_penguin[penguin],r_bird[bird]).\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("att(r_magic[magic_penguin],r_penguin[penguin]).\n"), std::string::npos);
  EXPECT_NE(r.out.find("sub(bird,r_bird[bird]).\n"), std::string::npos);
  EXPECT_NE(r.out.find("conc(r_bird[bird], flies).\n"), std::string::npos);
}

TEST(Cli, BuildEmptyAndPriorityCycle) {
  scratch::TempDir tmp("cli");
  scratch::spit(tmp.path() / "empty.rb", "");
  auto r = cli("build " + scratch::quote(tmp.path() / "empty.rb"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
  scratch::spit(tmp.path() / "cycle.rb",
                "fact a.\ndefeasible r1: a => b.\ndefeasible r2: a => ~b.\nprefer r1 > r2.\nprefer r2 > r1.\n");
  r = cli("build " + scratch::quote(tmp.path() / "cycle.rb"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find("priority cycle"), std::string::npos);
}

TEST(Cli, BuildWritesDot) {
  scratch::TempDir tmp("cli");
  const auto dot = tmp.path() / "g.dot";
  const auto r = cli("build " + in_corpus("dixon_zombie/rulebase.rb") + " --dot " + scratch::quote(dot));
  EXPECT_EQ(r.exit_code, 0);
  const auto text = scratch::slurp(dot);
  EXPECT_EQ(text.rfind("digraph", 0), 0u);
  EXPECT_NE(text.find("khaki"), std::string::npos);
}

TEST(Cli, ExportColoursByStatus) {
  const auto r = cli("export " + in_corpus("tweety_magic_penguin/framework.af"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"B\" [label=\"B\\n~flies\", fillcolor=lightcoral"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"A\" [label=\"A\\nflies\", fillcolor=palegreen"), std::string::npos);
  EXPECT_NE(r.out.find("\"C\" -> \"B\";"), std::string::npos);
}

TEST(Cli, MinModels) {
  auto r = cli("minmodels " + in_corpus("microsoft/theory.th") + " --query ge_half_million");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("ge_half_million: true\n", 0), 0u) << r.out;
  r = cli("minmodels " + in_corpus("microsoft/theory.th") + " --query ge_one_million --json");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["queries"][0]["holds"], false);
  EXPECT_EQ(j["minimal_models"].size(), 2u);
  r = cli("minmodels " + in_corpus("larry_four_cycle/theory.th") + " --query ~rich");
  EXPECT_EQ(r.out.rfind("~rich: true\n", 0), 0u);
}

TEST(Cli, HortyJson) {
  const auto r = cli("horty " + in_corpus("larry_four_cycle/rulebase.rb") + " --json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& c = j["conclusions"];
  EXPECT_NE(std::find(c.begin(), c.end(), "~rich"), c.end());
  EXPECT_EQ(std::find(c.begin(), c.end(), "rich"), c.end());
}

TEST(Cli, StatusOnRuleBase) {
  const auto r = cli("status " + in_corpus("brygt_floating/rulebase.rb") + " --semantics preferred --json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["conclusions"]["likes_ice_skating"], "Justified");
  EXPECT_EQ(j["arguments"]["r_dutch[born_in_holland]"], "Defensible");
}

TEST(Cli, DiffFactOnlyAgrees) {
  scratch::TempDir tmp("cli");
  scratch::spit(tmp.path() / "facts.rb", "fact a.\nfact ~b.\n");
  const auto r = cli("diff " + scratch::quote(tmp.path() / "facts.rb") + " --json");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["agree"], true);
}

TEST(Cli, CorpusExitCodes) {
  auto r = cli("corpus");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("summary: 11 cases, 11 passed, 0 failed"), std::string::npos);
  r = cli("corpus witness --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"]["cases"], 3);

  scratch::TempDir tmp("cli");
  fs::copy(kCorpus / "punishment", tmp.path() / "punishment", fs::copy_options::recursive);
  scratch::spit(tmp.path() / "punishment" / "expect.txt", "afcore lit:upto_six grounded Overruled # wrong\n");
  r = scratch::run("DEFEASOR_CORPUS_DIR=" + scratch::quote(tmp.path()) + " '" + DEFEASOR_CLI_PATH + "' corpus 2>&1");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("anchor: wrong"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(cli("").exit_code, 0);
  EXPECT_NE(cli("semantics").exit_code, 0);
  EXPECT_NE(cli("semantics x.af --semantics ideal").exit_code, 0);
  EXPECT_NE(cli("semantics /nonexistent.af").exit_code, 0);
}
