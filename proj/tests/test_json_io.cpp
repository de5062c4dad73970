#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/json_io.hpp"

using namespace hopfkit;

TEST_CASE("group tables round-trip through group/v1") {
  GroupTable g = dihedral_group(4);
  Json j = group_to_json(g);
  GroupTable back = group_from_json(j);
  CHECK(back.name == g.name);
  CHECK(back.order == g.order);
  CHECK(back.table == g.table);
}

TEST_CASE("algebras with non-integer entries round-trip exactly") {
  FinAlgebra a("half", 2);
  a.unit[0] = 1;
  a.c(0, 0, 0) = 1;
  a.c(0, 1, 1) = 1;
  a.c(1, 0, 1) = 1;
  a.c(1, 1, 0) = rat(-7, 3);
  FinAlgebra back = algebra_from_json(algebra_to_json(a));
  CHECK(back.name == a.name);
  CHECK(back.unit == a.unit);
  CHECK(back.sc == a.sc);
}

TEST_CASE("hopf and weakhopf structures round-trip") {
  HopfStructure h = sweedler_hopf();
  HopfStructure hb = hopf_from_json(hopf_to_json(h));
  CHECK(hb.alg.sc == h.alg.sc);
  CHECK(hb.comult == h.comult);
  CHECK(hb.counit == h.counit);
  CHECK(hb.antipode == h.antipode);
  CHECK(audit_hopf_ok(audit_hopf(hb)));

  WeakHopfStructure w = matrix_groupoid(2);
  WeakHopfStructure wb = weakhopf_from_json(weakhopf_to_json(w));
  CHECK(wb.alg.sc == w.alg.sc);
  CHECK(wb.comult == w.comult);
  CHECK(audit_weak_hopf(wb).ok());
}

TEST_CASE("extension pairs round-trip with the embedding revalidated") {
  ExtensionPair p = group_algebra_pair(dihedral_group(3), {0, 1, 2});
  ExtensionPair back = pair_from_json(pair_to_json(p));
  CHECK(back.big.sc == p.big.sc);
  CHECK(back.small.sc == p.small.sc);
  CHECK(back.embed == p.embed);

  Json bad = pair_to_json(p);
  bad["embed"][0][0] = "1/2";  // no longer maps 1 to 1
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
}

TEST_CASE("certificates round-trip and revalidate from the file content alone") {
  ExtensionPair p = group_algebra_pair(dihedral_group(3), {0, 1, 2});
  auto cert = decide_depth2(p, "left");
  REQUIRE(cert.has_value());
  Json j = certificate_to_json(*cert, p);
  CertificateFile f = certificate_from_json(j);
  CHECK(f.cert.side == "left");
  CHECK(validate_certificate(f.cert, f.pair).ok());

  Json tampered = j;
  tampered["pairs"][0]["beta"][0][0] = "5/3";
  CertificateFile bad = certificate_from_json(tampered);
  AuditReport rep = validate_certificate(bad.cert, bad.pair);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure().empty());

  Json wrong_section = j;
  wrong_section["section"] = "coset-transversal/v0";
  CHECK_THROWS_AS(certificate_from_json(wrong_section), std::invalid_argument);
}

TEST_CASE("loaders reject mismatched schemas") {
  Json j = group_to_json(cyclic_group(3));
  CHECK_THROWS_AS(hopf_from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);
  Json no_schema;
  no_schema["dim"] = 1;
  CHECK_THROWS_AS(algebra_from_json(no_schema), std::invalid_argument);
}

TEST_CASE("serialization is canonical and the content hash is FNV-1a 64") {
  Json a = hopf_to_json(group_hopf(dihedral_group(3)));
  Json b = hopf_to_json(group_hopf(dihedral_group(3)));
  CHECK(a.dump(2) == b.dump(2));

  CHECK(content_hash("") == "cbf29ce484222325");
  CHECK(content_hash("a") == "af63dc4c8601ec8c");
}
