#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringext/report.hpp"

using namespace ringext;

namespace {

const char* kExplicitE1 = R"(ringext 1
kind explicit
name qxq-over-q
dimA 2
dimB 1
unitA 1 1
unitB 1
scA 0 0 0 1
scA 1 1 1 1
scB 0 0 0 1
iota 1
iota 1
)";

const char* kGroupE3 = R"(ringext 1
kind group
name s3-over-a3
degree 3
gen_g 1 2 0
gen_g 1 0 2
gen_h 1 2 0
)";

}  // namespace

TEST_CASE("explicit input parses and analyzes") {
  ParsedInput in = parse_extension_spec(kExplicitE1);
  CHECK(in.name == "qxq-over-q");
  CHECK(in.ext.dimA() == 2);
  CHECK(in.ext.dimB() == 1);
  AnalyzeReport rep = analyze(in);
  CHECK(rep.props.d2_left == Tri::kYes);
  CHECK(rep.props.hseparable == Tri::kNo);
}

TEST_CASE("group input parses with hints") {
  ParsedInput in = parse_extension_spec(kGroupE3);
  CHECK(in.ext.dimA() == 6);
  CHECK(in.ext.dimB() == 3);
  CHECK(!in.hints.left.empty());
}

TEST_CASE("builtin input") {
  ParsedInput in = parse_extension_spec("ringext 1\nkind builtin\nfixture E5\n");
  CHECK(in.name == "E5");
  CHECK(in.ext.dimA() == 3);
}

TEST_CASE("parse errors carry locations") {
  // malformed scalar 1/0
  std::string bad = kExplicitE1;
  bad.replace(bad.find("scA 0 0 0 1"), 11, "scA 0 0 0 1/0");
  try {
    (void)parse_extension_spec(bad);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 8") != std::string::npos);
    CHECK(msg.find("malformed scalar") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_extension_spec("nonsense\n"), input_error);
  CHECK_THROWS_AS((void)parse_extension_spec("ringext 1\nkind explicit\n"),
                  input_error);
  // non-associative structure constants rejected with the triple
  std::string invalid = kExplicitE1;
  invalid += "scA 0 1 0 1\n";
  try {
    (void)parse_extension_spec(invalid);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("invalid at triple") != std::string::npos);
  }
}

TEST_CASE("machine bodies are byte-identical across runs") {
  for (const char* name : {"E1", "E3", "E4", "E5"}) {
    CAPTURE(name);
    Fixture f1 = make_fixture(name);
    ParsedInput in1;
    in1.name = f1.name;
    in1.ext = std::move(f1.ext);
    in1.hints = std::move(f1.hints);
    std::string a = serialize_machine(analyze(in1));
    Fixture f2 = make_fixture(name);
    ParsedInput in2;
    in2.name = f2.name;
    in2.ext = std::move(f2.ext);
    in2.hints = std::move(f2.hints);
    std::string b = serialize_machine(analyze(in2));
    CHECK(a == b);
  }
  // and for parsed file inputs
  std::string a = serialize_machine(analyze(parse_extension_spec(kExplicitE1)));
  std::string b = serialize_machine(analyze(parse_extension_spec(kExplicitE1)));
  CHECK(a == b);
}

TEST_CASE("witness recheck passes for every witness in a report") {
  for (const char* name : {"E1", "E2", "E3", "E4", "E5", "E6"}) {
    CAPTURE(name);
    Fixture f = make_fixture(name);
    ParsedInput in;
    in.name = f.name;
    in.ext = f.ext;
    in.hints = f.hints;
    AnalyzeReport rep = analyze(in);
    std::string body = serialize_machine(rep);
    auto checks = recheck_witnesses(body, in.ext);
    CHECK(!checks.empty());
    for (const auto& [what, ok] : checks) {
      CAPTURE(what);
      CHECK(ok);
    }
  }
}

TEST_CASE("verify-coring outcomes") {
  auto run = [](const char* name) {
    Fixture f = make_fixture(name);
    ParsedInput in;
    in.name = f.name;
    in.ext = std::move(f.ext);
    in.hints = std::move(f.hints);
    return verify_coring(in);
  };
  CoringVerifyReport e1 = run("E1");
  CHECK(e1.is_d2);
  CHECK(e1.items.all_pass());
  CHECK(e1.coinv_equals);
  CoringVerifyReport e6 = run("E6");
  CHECK(e6.is_d2);
  CHECK(e6.items.all_pass());
  CoringVerifyReport e4 = run("E4");
  CHECK(!e4.is_d2);
  std::string m = serialize_coring_machine(e4);
  CHECK(m.find("outcome not-d2") != std::string::npos);
}

TEST_CASE("sweep at tiny order") {
  SweepResult r1 = sweep_groups(1);
  CHECK(r1.rows.size() == 1);
  CHECK(r1.rows[0].normal);
  CHECK(r1.rows[0].hsep);  // H = G
  CHECK(r1.all_agree);
  SweepResult r6 = sweep_groups(6);
  bool found_a3 = false, found_c2 = false;
  for (const SweepRow& row : r6.rows) {
    if (row.group == "S3" && row.subgroup_order == 3) {
      found_a3 = true;
      CHECK(row.normal);
      CHECK(row.d2_left);
      CHECK(row.d2_right);
    }
    if (row.group == "S3" && row.subgroup_order == 2) {
      found_c2 = true;
      CHECK(!row.normal);
      CHECK(!row.d2_left);
    }
  }
  CHECK(found_a3);
  CHECK(found_c2);
  CHECK(r6.all_agree);
  CHECK_THROWS_AS((void)sweep_groups(13), input_error);
  // serialization deterministic
  CHECK(serialize_sweep_machine(r6, 6) == serialize_sweep_machine(sweep_groups(6), 6));
}
