#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ng/errors.hpp"
#include "ng/families.hpp"
#include "ng/verify.hpp"

using namespace ng;

TEST_CASE("dihedral component-count predictor") {
  CHECK(predict_kappa_dihedral(3) == 4);
  CHECK(predict_kappa_dihedral(5) == 6);
  CHECK(predict_kappa_dihedral(9) == 10);
  CHECK(predict_kappa_dihedral(12) == 4);   // 12 = 4 * 3
  CHECK(predict_kappa_dihedral(24) == 4);
  CHECK(predict_kappa_dihedral(20) == 6);   // 20 = 4 * 5
  CHECK_THROWS_AS(predict_kappa_dihedral(8), nilpotent_group_error);
  CHECK_THROWS_AS(predict_kappa_dihedral(16), nilpotent_group_error);
  CHECK_THROWS_AS(predict_kappa_dihedral(2), std::invalid_argument);
}

TEST_CASE("psl2 component-count predictor") {
  CHECK(predict_kappa_psl2(2) == 4);
  CHECK(predict_kappa_psl2(3) == 5);
  CHECK(predict_kappa_psl2(4) == 21);
  CHECK(predict_kappa_psl2(5) == 21);
  CHECK(predict_kappa_psl2(7) == 37);
  CHECK(predict_kappa_psl2(8) == 73);
  CHECK(predict_kappa_psl2(9) == 47);
  CHECK(predict_kappa_psl2(11) == 79);
  CHECK(predict_kappa_psl2(13) == 93);
  CHECK_THROWS_AS(predict_kappa_psl2(6), std::invalid_argument);
}

TEST_CASE("symmetric disconnectivity predictor") {
  CHECK(predict_sn_disconnected(3));
  CHECK(predict_sn_disconnected(4));
  CHECK(predict_sn_disconnected(5));
  CHECK(predict_sn_disconnected(6));
  CHECK(predict_sn_disconnected(7));
  CHECK(predict_sn_disconnected(8));   // 7 prime
  CHECK_FALSE(predict_sn_disconnected(9));
  CHECK_FALSE(predict_sn_disconnected(10));
  CHECK(predict_sn_disconnected(11));
  CHECK_THROWS_AS(predict_sn_disconnected(2), std::invalid_argument);
}

TEST_CASE("verify_group passes on the worked examples") {
  for (const char* spec : {"S:4", "D:5", "D:12", "PSL2:3"}) {
    VerificationReport r = verify_group(parse_group_spec(spec), spec);
    CHECK(r.all_passed());
    for (const auto& c : r.checks)
      if (c.status == "fail")
        MESSAGE(spec, "/", c.name, " expected=", c.expected.dump(),
                " actual=", c.actual.dump());
  }
}

TEST_CASE("verify_group rejects nilpotent input") {
  PermGroup c6 = parse_group_spec("C:6");
  CHECK_THROWS_AS(verify_group(c6, "C:6"), nilpotent_group_error);
}

TEST_CASE("verify_product covers both factor kinds") {
  CHECK(verify_product(parse_group_spec("S:3"), parse_group_spec("C:2"),
                       "S:3 x C:2")
            .all_passed());
  CHECK(verify_product(parse_group_spec("S:3"), parse_group_spec("S:3"),
                       "S:3 x S:3")
            .all_passed());
  CHECK(verify_product(parse_group_spec("D:5"), parse_group_spec("C:3"),
                       "D:5 x C:3")
            .all_passed());
}

TEST_CASE("verify_quotient_iso on trivial and nontrivial hypercenters") {
  CHECK(verify_quotient_iso(parse_group_spec("S:4"), "S:4").all_passed());
  CHECK(verify_quotient_iso(parse_group_spec("D:12"), "D:12").all_passed());
  CHECK(verify_quotient_iso(parse_group_spec("S:3xC:2"), "S:3xC:2")
            .all_passed());
}

TEST_CASE("family sweeps") {
  VerificationReport d = verify_family_dihedral(15);
  CHECK(d.all_passed());
  int skipped = 0;
  for (const auto& c : d.checks)
    if (c.status == "skipped") ++skipped;
  CHECK(skipped == 2);  // D4 and D8 are nilpotent

  CHECK(verify_family_psl2(8).all_passed());
  VerificationReport s = verify_family_symmetric(8, false);
  CHECK(s.all_passed());
  bool s7_skipped = false, s8_skipped = false;
  for (const auto& c : s.checks) {
    if (c.name == "S7") s7_skipped = c.status == "skipped";
    if (c.name == "S8") s8_skipped = c.status == "skipped";
  }
  CHECK(s7_skipped);
  CHECK(s8_skipped);
}

TEST_CASE("report serialization") {
  VerificationReport r = verify_group(parse_group_spec("D:5"), "D:5");
  auto doc = r.to_json();
  CHECK(doc["subject"] == "D:5");
  CHECK(doc.contains("elapsed_ms"));
  REQUIRE(!doc["checks"].empty());
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("paper_ref"));
    CHECK((c["status"] == "pass" || c["status"] == "fail" ||
           c["status"] == "skipped"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
  }
  CHECK(r.summary().find("PASS D:5/") != std::string::npos);
}
