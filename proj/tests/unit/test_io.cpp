#include <doctest.h>

#include "coverlat/errors.hpp"
#include "coverlat/io.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("JSON input") {
  const Covering c = io::parse_covering_json(
      R"({"universe": ["1","2","3","4"], "covering": [["1","2","3"],["1"],["1","3","4"],["2","3"]]})");
  CHECK(c == testing::example_one());
  const Covering numeric =
      io::parse_covering(R"({"universe": [1,2,3], "covering": [[1,2],[3]]})");
  CHECK(numeric == testing::make_covering(3, {{1, 2}, {3}}));
  CHECK(error_of([] { io::parse_covering_json("{"); }) == Errc::ParseError);
  CHECK(error_of([] { io::parse_covering_json(R"({"covering": [["a"]]})"); }) == Errc::ParseError);
  CHECK(error_of([] { io::parse_covering_json(R"({"universe":["a"],"covering":[[1.5]]})"); }) ==
        Errc::ParseError);
  CHECK(error_of([] { io::parse_covering_json(R"({"universe":["a"],"covering":[["a"],[]]})"); }) ==
        Errc::EmptyBlock);
  CHECK(error_of([] { io::parse_covering_json(R"({"universe":["a","b"],"covering":[["a"]]})"); }) ==
        Errc::NotACover);
}

TEST_CASE("text input") {
  CHECK(io::parse_covering_text("1 2 3\n1\n1 3 4\n2 3\n") == testing::example_one());
  // Braces and commas are separators; comments and blank lines are skipped.
  CHECK(io::parse_covering("# example\n{1,2,3}\n\n{1}\n{1,3,4}\n{2,3}\n") == testing::example_one());
  // Numeric labels sort numerically, so 10 follows 9.
  const Covering c = io::parse_covering_text("10 9\n1 2 3 4 5 6 7 8\n");
  CHECK(c.universe().labels().back() == "10");
  const Covering named = io::parse_covering_text("universe: b a c\na b\nc\n");
  CHECK(named.universe().labels() == std::vector<std::string>{"b", "a", "c"});
  CHECK(io::parse_covering_text("y x\nz\n").universe().labels() ==
        std::vector<std::string>{"x", "y", "z"});
  CHECK(error_of([] { io::parse_covering_text("universe: a b c\na b\n"); }) == Errc::NotACover);
  CHECK(error_of([] { io::parse_covering_text("universe: a b\na q\n"); }) == Errc::UnknownElement);
  CHECK(error_of([] { io::parse_covering_text("a\n{}\n"); }) == Errc::EmptyBlock);
  CHECK(error_of([] { io::parse_covering_text("a\nuniverse: a\n"); }) == Errc::ParseError);
  CHECK(error_of([] { io::parse_covering_text(""); }) == Errc::ParseError);
}

TEST_CASE("subset rendering and parsing") {
  const Covering c = testing::example_one();
  const Universe& u = c.universe();
  CHECK(io::format_subset(S(4, {1, 3, 4}), u) == "{1,3,4}");
  CHECK(io::format_subset(Subset(4), u) == "{}");
  CHECK(io::format_family(testing::family(4, {{1}, {2, 3}}), u) == "{{1},{2,3}}");
  CHECK(io::parse_subset("{1,4}", u) == S(4, {1, 4}));
  CHECK(io::parse_subset("4 1", u) == S(4, {1, 4}));
  CHECK(io::parse_subset("{}", u).empty());
  CHECK(io::parse_subset("", u).empty());
  CHECK(error_of([&] { io::parse_subset("{1,5}", u); }) == Errc::UnknownElement);
}

TEST_CASE("reports round-trip their covering section") {
  for (const Covering& c : {testing::example_one(), testing::example_three(),
                            io::parse_covering_text("universe: q p r\np q\nr q\n")}) {
    const ApproxSpace space(c);
    const auto report = io::analysis_json(space);
    CHECK(io::parse_covering_json(report.dump()) == c);
    const auto again = io::parse_covering_json(io::covering_json(c).dump());
    CHECK(again.universe() == c.universe());
  }
}

TEST_CASE("analysis report of the first example") {
  const ApproxSpace space(testing::example_one());
  const auto j = io::analysis_json(space);
  CHECK(j["universe_size"] == 4);
  CHECK(j["neighborhoods"][3]["neighborhood"] == io::json({"1", "3", "4"}));
  CHECK(j["unary"] == false);
  CHECK(j["reduct"] == io::json::parse(R"([["1"],["2","3"],["1","3","4"]])"));
  const std::string text = io::analysis_text(space);
  CHECK(text.find("N(2) = {2,3}\n") != std::string::npos);
  CHECK(text.find("reduct: {{1},{2,3},{1,3,4}}\n") != std::string::npos);
  CHECK(text.find("unary: false\n") != std::string::npos);
}

TEST_CASE("DOT output") {
  const auto f = build_F(ApproxSpace(testing::non_distributive()));
  const std::string dot = io::to_dot(hasse(f), f.space().universe(), "F");
  CHECK(dot == io::to_dot(hasse(f), f.space().universe(), "F"));
  CHECK(dot.starts_with("digraph F {\n  rankdir=BT;\n"));
  CHECK(dot.find("n0 [label=\"{}\"];") != std::string::npos);
  CHECK(dot.find("n5 [label=\"{1,2,3,4}\"];") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
}

TEST_CASE("lattice report") {
  const auto f = build_F(ApproxSpace(testing::non_distributive()));
  const auto r = classify(f);
  const auto j = io::lattice_json(f, r);
  CHECK(j["members"].size() == 6);
  CHECK(j["classification"]["distributive"] == false);
  CHECK(j["classification"].contains("distributivity_witness"));
  CHECK(io::lattice_text(f, r).find("distributive: false  witness a=") != std::string::npos);
}
