// Copyright 2026 The dualqf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "dualqf/problem.hpp"
#include "support.hpp"

using namespace dualqf;
using namespace dualqf::testing;
using nlohmann::json;

namespace {

const char* kWorked = R"js({
  "field": "Q", "n": 5,
  "S": [["1","0","0","0","0"], ["0","1","0","0","0"], ["0","0","1","0","0"]],
  "Q": {"diag": ["0","1/2","3/2"], "upper": [[1, 2, "2"]]}
})js";

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a dualqf::Error");
  return Errc::InvalidArgument;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse the worked example") {
  auto p = parse_problem(kWorked);
  CHECK(p.instance.n() == 5);
  CHECK(p.instance.m() == 3);
  CHECK(p.instance == worked_example());
  CHECK_FALSE(p.map);
}

TEST_CASE("parse edge cases") {
  auto empty = parse_problem(R"js({"field":"Q","n":3,"S":[],"Q":{"diag":[],"upper":[]}})js");
  CHECK(empty.instance.m() == 0);
  CHECK(empty.instance.n() == 3);

  auto ints = parse_problem(R"js({"field":"GF(3)","n":2,"S":[[1,0]],"Q":{"diag":[4],"upper":[]}})js");
  CHECK(ints.instance.Q().diag(0).is_one());

  CHECK(code_of([] { parse_problem(R"js({"field":"Q","n":3,"S":[["1","0","0"],["0","1","0"]],
      "Q":{"diag":["1","1"],"upper":[[1,0,"1"]]}})js"); }) == Errc::ValidationError);
  CHECK(code_of([] { parse_problem(R"js({"field":"Q","n":2,"S":[["1","0"],["2","0"]],
      "Q":{"diag":["1","1"],"upper":[]}})js"); }) == Errc::ValidationError);
  CHECK(code_of([] { parse_problem(R"js({"field":"GF(6)","n":1,"S":[],"Q":{"diag":[],"upper":[]}})js"); }) ==
        Errc::ValidationError);
  CHECK(code_of([] { parse_problem(R"js({"field":"Q","n":1,"S":[["x"]],"Q":{"diag":["1"],"upper":[]}})js"); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_problem("{not json"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_problem(R"js({"field":"Q","n":2,"S":[["1"]],"Q":{"diag":["1"],"upper":[]}})js"); }) ==
        Errc::ParseError);
  CHECK(code_of([] { parse_problem(R"js({"field":"Q","S":[],"Q":{"diag":[],"upper":[]}})js"); }) == Errc::ParseError);

  auto msg = message_of([] { parse_problem(R"js({"field":"Q","n":1,"S":[["1"]],"Q":{"diag":["1/0"],"upper":[]}})js"); });
  CHECK(msg.find("/Q/diag/0") != std::string::npos);
}

TEST_CASE("field override") {
  auto p = parse_problem(kWorked, GF(5));
  CHECK(p.instance.field() == GF(5));
  CHECK(p.instance.Q().diag(1) == S(GF(5), "3"));
}

TEST_CASE("serialization round trip") {
  auto p = parse_problem(kWorked);
  auto text = serialize_problem(p);
  CHECK(parse_problem(text) == p);
  CHECK(serialize_problem(parse_problem(text)) == text);

  Random rnd(71);
  for (int t = 0; t < 100; ++t) {
    auto f = rnd.field();
    ProblemFile file{random_instance(rnd, f, {6, true}).value()};
    const std::size_t n = file.instance.n();
    if (rnd.coin() && n > 0) file.map = rnd.invertible(f, n);
    if (rnd.coin()) file.ratio = rnd.nonzero(f);
    if (rnd.coin()) file.form = rnd.vector(f, n);
    if (rnd.coin()) file.vector = rnd.vector(f, n);
    if (rnd.coin()) file.matrix = rnd.matrix(f, 3, 3);
    auto once = serialize_problem(file);
    CHECK(parse_problem(once) == file);
    CHECK(serialize_problem(parse_problem(once)) == once);
  }
}

TEST_CASE("dualize document") {
  auto doc = json::parse(run_command(parse_problem(kWorked), "dualize"));
  CHECK(doc["G22_inv"] == json::parse(R"js([["-3","2"],["2","-1"]])js"));
  CHECK(doc["dual"]["Q"]["diag"] == json::parse(R"js(["-3/2","-1/2","0","0"])js"));
  CHECK(doc["S_hat"].size() == 4);
  CHECK(doc["R_hat"].size() == 2);
  CHECK(doc["adapted_basis"].size() == 5);
  CHECK(doc["I2"] == json::parse("[1,2]"));
  CHECK_FALSE(doc.contains("half_gram"));

  auto half = json::parse(run_command(parse_problem(kWorked), "dualize", {true}));
  CHECK(half["half_gram"]["dual"][0] == json::parse(R"js(["-3","2","0","0"])js"));
  CHECK(half["half_gram"]["primal"] == json::parse(R"js([["0","0","0"],["0","1","2"],["0","2","3"]])js"));
}

TEST_CASE("other documents") {
  auto p = parse_problem(kWorked);
  CHECK(json::parse(run_command(p, "double-dual")) == json::parse(R"js({"double_dual_equals_original":true})js"));
  CHECK(json::parse(run_command(p, "check-condition")) == json::parse(R"js({"condition":true})js"));
  auto rad = json::parse(run_command(p, "radical"));
  CHECK(rad["d"] == 1);
  CHECK(rad["R"] == json::parse(R"js([["1","0","0","0","0"]])js"));
  auto adj = json::parse(run_command(p, "adjugate"));
  CHECK(adj["determinant"] == "0");

  auto gf2 = parse_problem(R"js({"field":"GF(2)","n":3,"S":[["1","0","0"],["0","1","0"]],
      "Q":{"diag":["0","1"],"upper":[]}})js");
  CHECK(json::parse(run_command(gf2, "check-condition")) == json::parse(R"js({"condition":false})js"));
  CHECK(code_of([&] { run_command(gf2, "dualize"); }) == Errc::RadicalConditionViolated);
  CHECK(code_of([&] { run_command(gf2, "dualize", {true}); }) == Errc::CharTwo);

  CHECK(code_of([&] { run_command(p, "linked"); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { run_command(p, "frobnicate"); }) == Errc::InvalidArgument);
}

TEST_CASE("command table and exit codes") {
  CHECK(command_names() == std::vector<std::string>{"radical", "check-condition", "dualize", "double-dual", "linked",
                                                    "linked-forms", "normalize", "similarity", "adjugate"});
  CHECK(exit_code_for(Errc::RadicalConditionViolated) == 2);
  CHECK(exit_code_for(Errc::ParseError) == 1);
  CHECK(exit_code_for(Errc::ValidationError) == 1);
}

TEST_CASE("documents are deterministic") {
  auto p = parse_problem(kWorked);
  for (const auto& cmd : {"radical", "dualize", "normalize", "adjugate", "double-dual"})
    CHECK(run_command(p, cmd) == run_command(parse_problem(kWorked), cmd));
}
