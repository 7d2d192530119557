#include "doctest.h"
#include "linklab/session.hpp"

using namespace linklab;

namespace {
const char* kFlatScript =
    "ring R = QQ[x,y,z];\n"
    "ideal J = (x, y^2, z^2);\n"
    "ideal m = (x, y, z);\n"
    "link I = J : m;\n"
    "check link-theorem R m (x, y^2, z^2);\n"
    "compute reduction-number I J;\n";

const char* kNegativeScript =
    "ring R = QQ[x,y] / (x^2, x*y);\n"
    "ideal J = (y^3);\n"
    "ideal m = (x, y);\n"
    "expect fail check link-theorem R m (y^3);\n";
}  // namespace

TEST_CASE("field spec strings") {
  CHECK(parse_field_spec("QQ") == FieldSpec{});
  CHECK(parse_field_spec("FF(11)") == FieldSpec{11});
  CHECK_THROWS_AS(parse_field_spec("GF(8)"), DomainError);
  CHECK_THROWS_AS(parse_field_spec("FF(x)"), DomainError);
}

TEST_CASE("declarations parse into the session tables") {
  Session s = parse_session("ring R = QQ[x,y];\n");
  REQUIRE(s.rings.count("R") == 1);
  CHECK(s.rings.at("R")->nvars() == 2);
  CHECK(s.commands.empty());

  Session full = parse_session(kFlatScript);
  CHECK(full.rings.size() == 1);
  CHECK(full.ideals.size() == 2);
  CHECK(full.commands.size() == 3);
  CHECK(full.commands[0].verb == "link");
  CHECK(full.commands[1].verb == "check link-theorem");
  CHECK(full.commands[2].verb == "compute reduction-number");
}

TEST_CASE("undeclared names are rejected with a position") {
  try {
    parse_session("ring R = QQ[x,y];\nideal J = (y^3);\nlink I = J : m;\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("undeclared: m") != std::string::npos);
    CHECK(e.line == 3);
    CHECK(e.col == 14);
  }
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(parse_session("frobnicate;\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = QQ[x,y]\n"), ParseError);           // missing ';'
  CHECK_THROWS_AS(parse_session("ring R = FF(4)[x,y];\n"), ParseError);       // 4 is not prime
  CHECK_THROWS_AS(parse_session("ideal J = (x);\n"), ParseError);             // no ring yet
  CHECK_THROWS_AS(parse_session("ring R = QQ[x];\nideal J = (q);\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = QQ[x];\nideal J = (x);\nexpect fail compute rees J;\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_session("ring R = QQ[x];\nideal J = (x);\ncheck frob J J;\n"), ParseError);
  CHECK_THROWS_AS(parse_session("ring R = QQ[x];\nring R = QQ[y];\n"), ParseError);
}

TEST_CASE("comments and the field override") {
  Session s = parse_session("# a comment line\nring R = QQ[x,y]; # trailing\nideal A = (x);\n");
  CHECK(s.rings.at("R")->field().rational());

  SessionOptions opt;
  opt.field_override = "FF(7)";
  Session t = parse_session("ring R = QQ[x,y];\n", opt);
  CHECK(t.rings.at("R")->field().p == 7);
}

TEST_CASE("empty session runs to an empty report") {
  SessionResult r = run_session_text("");
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("commands").empty());
  CHECK(r.report.at("summary").at("ok") == 0);
}

TEST_CASE("the flat-space script passes end to end") {
  SessionResult r = run_session_text(kFlatScript);
  CHECK(r.exit_code == 0);
  const auto& cmds = r.report.at("commands");
  REQUIRE(cmds.size() == 3);
  CHECK(cmds[0].at("result").at("I_basis") ==
        nlohmann::ordered_json::array({"y^2", "y*z", "z^2", "x"}));
  CHECK(cmds[1].at("report").at("conclusion") == "pass");
  CHECK(cmds[2].at("result").at("reduction_number") == 1);
  CHECK(r.report.at("summary").at("exit") == 0);
}

TEST_CASE("expect fail flips the verdict on the negative example") {
  SessionResult with = run_session_text(kNegativeScript);
  CHECK(with.exit_code == 0);
  const auto& rep = with.report.at("commands").at(0).at("report");
  CHECK(rep.at("values").at("I2_equals_JI") == false);
  CHECK(rep.at("conclusion") == "inapplicable");

  std::string plain =
      "ring R = QQ[x,y] / (x^2, x*y);\n"
      "ideal J = (y^3);\n"
      "ideal m = (x, y);\n"
      "check link-theorem R m (y^3);\n";
  CHECK(run_session_text(plain).exit_code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  SessionResult a = run_session_text(kFlatScript);
  SessionResult b = run_session_text(kFlatScript);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK_FALSE(a.report.contains("timings"));

  SessionOptions opt;
  opt.timings = true;
  CHECK(run_session_text(kFlatScript, opt).report.contains("timings"));
}

TEST_CASE("engine errors abort the session with exit 2") {
  std::string script =
      "ring R = QQ[x,y];\n"
      "ideal A = (x);\n"
      "ideal B = (y);\n"
      "compute reduction-number A B;\n"
      "compute rees A;\n";
  SessionResult r = run_session_text(script);
  CHECK(r.exit_code == 2);
  const auto& cmds = r.report.at("commands");
  REQUIRE(cmds.size() == 1);  // the second command never ran
  CHECK(cmds[0].contains("error"));
  CHECK(r.report.at("summary").at("executed") == 1);
  CHECK(r.report.at("summary").at("commands") == 2);
}

TEST_CASE("multiplicity tables flow through compute") {
  std::string script =
      "ring R = QQ[x,y];\n"
      "ideal A = (x^2 - y^2);\n"
      "ideal q = (x, y);\n"
      "compute multiplicity A q;\n";
  SessionResult r = run_session_text(script);
  CHECK(r.exit_code == 0);
  const auto& result = r.report.at("commands").at(0).at("result");
  CHECK(result.at("multiplicity") == 2);
  CHECK(result.at("table").at("dimension") == 1);
}

TEST_CASE("link provenance feeds the canonical check") {
  std::string script =
      "ring R = QQ[x,y,z] / (x^2 - y^2);\n"
      "ideal J = (y, z);\n"
      "ideal m = (x, y, z);\n"
      "link I = J : m;\n"
      "assert cm I;\n"
      "check canonical I J;\n";
  SessionResult r = run_session_text(script);
  CHECK(r.exit_code == 0);
  const auto& rep = r.report.at("commands").at(1).at("report");
  CHECK(rep.at("conclusion") == "pass");
  bool saw = false;
  for (const auto& c : rep.at("certificates"))
    if (c.at("claim") == "colon_equals_linked_target") saw = c.at("pass").get<bool>();
  CHECK(saw);
}

TEST_CASE("gorenstein and delta commands are scriptable") {
  std::string script =
      "ring R = QQ[x,y,z];\n"
      "ideal J = (x, y^2, z^2);\n"
      "ideal m = (x, y, z);\n"
      "link I = J : m;\n"
      "expect fail check gorenstein I J;\n";
  SessionResult r = run_session_text(script);
  CHECK(r.exit_code == 0);

  std::string delta =
      "ring R = QQ[x,y] / (x^3, x^2*y, x*y^2, y^3);\n"
      "check delta R ();\n";
  SessionResult d = run_session_text(delta);
  CHECK(d.exit_code == 0);
  CHECK(d.report.at("commands").at(0).at("report").at("values").at("lambda_delta") == 6);
}

TEST_CASE("text rendering is derived from the report") {
  SessionResult r = run_session_text(kFlatScript);
  std::string text = render_text(r.report);
  CHECK(text.find("linkage-lab") != std::string::npos);
  CHECK(text.find("=> ok") != std::string::npos);
  CHECK(text.find("summary: 3/3 commands") != std::string::npos);
}
