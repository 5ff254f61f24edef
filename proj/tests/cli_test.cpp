#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "invseq/cli/commands.hpp"

using namespace invseq;
using namespace invseq::cli;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(RunConfig cfg) {
  std::ostringstream os;
  const int status = run_command(cfg, os);
  return {status, os.str()};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

RunConfig make(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("invseq_cli_test_" + name);
}

}  // namespace

TEST(Count, SeventhTerm) {
  auto c = make("count");
  c.class_selector = "1176";
  c.n = 7;
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(last_line(r.out), "7 1176");
}

TEST(Count, OracleForSingletonPattern) {
  auto c = make("count");
  c.patterns = "001";
  c.n = 5;
  c.engine = EngineChoice::oracle;
  EXPECT_EQ(last_line(run(c).out), "5 16");
}

TEST(Count, EmptySequence) {
  auto c = make("count");
  c.class_selector = "1016";
  c.n = 0;
  c.format = Format::bfile;
  EXPECT_EQ(run(c).out, "0 1\n");
}

TEST(Count, EnginesAgree) {
  auto c = make("count");
  c.class_selector = "1833A";
  c.n = 9;
  c.format = Format::bfile;
  const auto tree = run(c).out;
  c.engine = EngineChoice::census;
  EXPECT_EQ(run(c).out, tree);
  c.engine = EngineChoice::oracle;
  EXPECT_EQ(run(c).out, tree);
}

TEST(Count, SelectorsResolveToSameClass) {
  auto c = make("count");
  c.n = 8;
  c.format = Format::bfile;
  c.class_selector = "C1176";
  const auto by_index = run(c).out;
  c.class_selector.clear();
  c.triple = ">,<=,!=";
  EXPECT_EQ(run(c).out, by_index);
  c.triple.clear();
  c.patterns = "100,102,201";
  EXPECT_EQ(run(c).out, by_index);
}

TEST(Count, SelectorErrors) {
  auto c = make("count");
  EXPECT_THROW(run(c), UsageError);
  c.class_selector = "1176";
  c.patterns = "001";
  EXPECT_THROW(run(c), UsageError);
  c.patterns.clear();
  c.class_selector = "9999";
  EXPECT_THROW(run(c), UsageError);
  // No succession rule for this set, so the rule engines are unavailable.
  c.class_selector.clear();
  c.patterns = "001";
  c.engine = EngineChoice::gentree;
  EXPECT_THROW(run(c), UsageError);
}

TEST(Count, OracleBoundEnforced) {
  auto c = make("count");
  c.patterns = "012";
  c.n = 8;
  c.oracle_bound = 7;
  EXPECT_THROW(run(c), oracle::BoundExceeded);
  c.oracle_bound = 8;
  EXPECT_EQ(run(c).status, 0);
}

TEST(Count, JsonLinesRoundTrip) {
  auto c = make("count");
  c.class_selector = "733";
  c.n = 12;
  c.format = Format::jsonl;
  const auto out = run(c).out;
  const auto expect = gentree::count_class(gentree::ClassId::c733, 12);
  const auto ls = lines(out);
  ASSERT_EQ(ls.size(), expect.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto j = json::parse(ls[i]);
    EXPECT_EQ(j.at("n").get<std::size_t>(), i);
    EXPECT_EQ(Integer(j.at("value").get<std::string>()), expect[i]);
    EXPECT_EQ(j.at("sequence"), "733");
    EXPECT_EQ(j.at("source"), "gentree");
  }
}

TEST(Count, BfileRegeneratesByteIdentical) {
  const auto path = temp_file("b1420.txt");
  auto c = make("count");
  c.class_selector = "1420";
  c.n = 40;
  c.format = Format::bfile;
  {
    std::ofstream f(path);
    f << run(c).out;
  }
  c.format = Format::table;
  c.compare = path.string();
  c.n = 60;
  auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(last_line(r.out).find("verdict OK"), std::string::npos);
  EXPECT_NE(last_line(r.out).find("byte-identical"), std::string::npos);

  {
    std::ofstream f(path);
    f << "0 1\n1 1\n2 2\n3 6\n4 23\n";
  }
  r = run(c);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(last_line(r.out).find("mismatch at index 4"), std::string::npos);

  c.n = 3;
  EXPECT_EQ(run(c).status, 1);  // the file is longer than the generated prefix
  std::filesystem::remove(path);
}

TEST(Bfile, Reader) {
  std::istringstream in("# comment\n\n0 1\n1 12345678901234567890123\n");
  const auto v = read_bfile(in);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[1].second, Integer("12345678901234567890123"));
  std::istringstream bad("0 1 2\n");
  EXPECT_THROW(read_bfile(bad), UsageError);
}

TEST(Series, PublishedExpansion) {
  auto c = make("series");
  c.class_selector = "663A";
  c.order = 8;
  c.format = Format::bfile;
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('#')), "0 1\n1 1\n2 2\n3 5\n4 15\n5 50\n6 178\n7 663\n8 2552\n");
  EXPECT_NE(last_line(r.out).find("# verdict OK"), std::string::npos);
}

TEST(Series, MinimalPolynomialVerdict) {
  auto c = make("series");
  c.class_selector = "1833A";
  c.order = 10;
  c.verify_minpoly = true;
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(last_line(r.out).find("minimal polynomial of degree 6 vanishes"), std::string::npos);
  EXPECT_NE(r.out.find("10 219092"), std::string::npos);
}

TEST(Series, BothRoutesFor733) {
  auto c = make("series");
  c.class_selector = "733";
  c.order = 25;
  c.format = Format::bfile;
  const auto a = run(c);
  c.route = "symmetric";
  const auto b = run(c);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Series, NoClosedForm) {
  auto c = make("series");
  c.class_selector = "830";
  c.order = 10;
  try {
    run(c);
    FAIL() << "expected an error";
  } catch (const series::NoClosedForm& e) {
    EXPECT_NE(std::string(e.what()).find("no closed form"), std::string::npos);
  }
}

TEST(Classify, SummaryLines) {
  auto c = make("classify");
  const auto out = run(c).out;
  EXPECT_NE(out.find("triples 343\n"), std::string::npos);
  EXPECT_NE(out.find("Wilf classes (n<=9) 63\n"), std::string::npos);
  EXPECT_NE(out.find("pattern sets 154\n"), std::string::npos);
  EXPECT_NE(out.find("equivalence classes "), std::string::npos);
}

TEST(Classify, JsonLines) {
  auto c = make("classify");
  c.n = 7;
  c.format = Format::jsonl;
  const auto ls = lines(run(c).out);
  const auto summary = json::parse(ls.front());
  EXPECT_EQ(summary.at("triples"), 343);
  std::size_t eq = 0, wilf = 0, members = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto j = json::parse(ls[i]);
    if (j.at("kind") == "equivalence") {
      ++eq;
      members += j.at("members").get<std::size_t>();
    } else {
      ++wilf;
    }
  }
  EXPECT_EQ(eq, summary.at("equivalence_classes").get<std::size_t>());
  EXPECT_EQ(wilf, summary.at("wilf_classes").get<std::size_t>());
  EXPECT_EQ(members, 343u);
}

TEST(Asymptotics, AlgebraicRate) {
  auto c = make("asymptotics");
  c.class_selector = "1420";
  c.terms = 200;
  c.format = Format::jsonl;
  const auto ls = lines(run(c).out);
  const auto fit = json::parse(ls.at(0));
  EXPECT_NEAR(fit.at("mu").get<double>(), 5.4, 5.4e-3);
  EXPECT_EQ(json::parse(ls.at(1)).at("verdict"), "OK");
}

TEST(Asymptotics, NonAlgebraicRate) {
  auto c = make("asymptotics");
  c.class_selector = "1953A";
  c.terms = 300;
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("mu 6.75"), std::string::npos);
}

TEST(Asymptotics, StretchedDiagnostics) {
  auto c = make("asymptotics");
  c.class_selector = "759";
  c.terms = 300;
  c.model = "stretched";
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("sigma 0.375"), std::string::npos);
  EXPECT_NE(r.out.find("log mu1"), std::string::npos);
  EXPECT_NE(r.out.find("diagnostic only"), std::string::npos);
}

TEST(Asymptotics, TooFewTerms) {
  auto c = make("asymptotics");
  c.class_selector = "1420";
  c.terms = 10;
  EXPECT_THROW(run(c), UsageError);
}

TEST(Words, FormulaAgainstOracle) {
  auto c = make("words");
  c.k = 6;
  c.b = 4;
  c.rules = "R1R2";
  auto r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("formula a(6,4) = 140"), std::string::npos);
  EXPECT_NE(r.out.find("oracle  a(6,4) = 140"), std::string::npos);

  c.k = 3;
  c.b = 3;
  c.rules = "R1R3";
  r = run(c);
  EXPECT_NE(r.out.find("formula d(3,3) = 5"), std::string::npos);
  EXPECT_NE(r.out.find("oracle  d(3,3) = 5"), std::string::npos);

  c.k = 5;
  c.b = 2;
  r = run(c);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("d(5,2) = 0"), std::string::npos);

  c.rules = "R2R3";
  EXPECT_THROW(run(c), UsageError);
}

TEST(VerifyAll, SelectedCriteria) {
  auto c = make("verify-all");
  c.criteria = {2, 3, 6};
  c.format = Format::jsonl;
  const auto r = run(c);
  EXPECT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  for (const auto& l : ls) EXPECT_TRUE(json::parse(l).at("pass").get<bool>());
  c.criteria = {10};
  EXPECT_THROW(run(c), UsageError);
}

TEST(Config, JsonOverlay) {
  RunConfig c;
  apply_json(c, json::parse(R"({"class": "1176", "n": 12, "format": "bfile", "oracle_bound": 11, "workers": 2})"));
  EXPECT_EQ(c.class_selector, "1176");
  EXPECT_EQ(c.n, 12);
  EXPECT_EQ(c.format, Format::bfile);
  EXPECT_EQ(c.oracle_bound, 11);
  EXPECT_EQ(c.workers, 2u);
  EXPECT_THROW(apply_json(c, json::parse(R"({"colour": 1})")), UsageError);
  EXPECT_THROW(apply_json(c, json::parse(R"({"workers": 0})")), UsageError);
  EXPECT_THROW(apply_json(c, json::parse("[1]")), UsageError);
}

TEST(Config, EnvironmentBound) {
  RunConfig c;
  ::setenv(oracle_bound_variable, "12", 1);
  apply_environment(c);
  EXPECT_EQ(c.oracle_bound, 12);
  ::setenv(oracle_bound_variable, "twelve", 1);
  EXPECT_THROW(apply_environment(c), UsageError);
  ::unsetenv(oracle_bound_variable);
}

TEST(Determinism, RepeatedRunsMatch) {
  auto c = make("count");
  c.patterns = "010,120";
  c.n = 9;
  c.workers = 1;
  const auto one = run(c).out;
  c.workers = 4;
  EXPECT_EQ(run(c).out, one);
}
