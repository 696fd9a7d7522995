#include <doctest.h>

#include "olss/constructions.hpp"
#include "olss/error.hpp"
#include "olss/formats.hpp"
#include "olss/report.hpp"

using namespace olss;

TEST_CASE("structure text round-trips") {
  for (const auto& g : {family::petersen(), family::threshold(4, 3), family::edgeless(2)}) {
    const auto text = format_structure(g);
    CHECK(parse_structure(text) == g);
    CHECK(format_structure(parse_structure(text)) == text);
  }
  CHECK(parse_structure("# path\nn 3\n\ne 1 2\ne 0 1\n") == family::path(3));
}

TEST_CASE("structure parse errors") {
  for (const char* bad : {"", "e 0 1\n", "n 2\ne 0 2\n", "n 2\nn 2\n", "n x\n", "n 2\nq 1\n"}) {
    try {
      (void)parse_structure(bad);
      FAIL("accepted: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("scheme dump round-trips") {
  const auto c5 = family::cycle(5);
  for (const auto& s : {c6_offline(kC6Pi), shamir_threshold(4, 2), stinson_star_cover(c5, neighborhood_star_cover(c5))}) {
    const auto text = format_scheme(s);
    CHECK(parse_scheme(text) == s);
    CHECK(format_scheme(parse_scheme(text)) == text);
  }
  CHECK_THROWS_AS(parse_scheme("p 4\nb 1\nsecret 1\n1 0\n"), Error);
  CHECK_THROWS_AS(parse_scheme("p 5\nb 1\nsecret 1\n1\n"), Error);
  CHECK_THROWS_AS(parse_scheme("p 5\nb 1\nsecret 1\n1 0\nparticipant 1 0\n"), Error);
}

TEST_CASE("transcript listing") {
  auto dealer = first_fit_general(2)();
  const std::vector<int> order{2, 1, 0};
  const auto text = format_transcript(run(*dealer, family::path(3), order));
  CHECK(text.rfind("perm 2 1 0\n", 0) == 0);
  CHECK(text.find("step 2 vertex 1 backward {1,2}\n") != std::string::npos);
  CHECK(text.find("\np 2\n") != std::string::npos);
}

TEST_CASE("report bodies are reproducible") {
  auto body = [](unsigned workers) {
    const auto r = sweep(first_fit_graph(), family::cycle(5), SweepMode::sample(15, 4), {workers, false});
    Report report;
    report.body["sweep"] = sweep_json(r);
    report.header["wall_time_s"] = static_cast<double>(workers);
    return report;
  };
  const auto a = body(1), b = body(4);
  CHECK(a.body.dump() == b.body.dump());
  CHECK(a.json() != b.json());
  CHECK(a.body["sweep"]["seed"] == 4);
  CHECK(rational_json(make_rational(3, 2))["decimal"] == "1.500000");
  CHECK(to_decimal(make_rational(2, 3)) == "0.666667");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
}
