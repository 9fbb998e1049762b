#include <doctest.h>

#include "bilattice/errors.hpp"
#include "bilattice/json_io.hpp"

using namespace bilattice;

namespace {

ExactScalar q(const char* s) { return parse_scalar(s); }

template <class T, class Read>
void round_trip(const T& value, Read read) {
  const std::string text = to_json(value).dump();
  CHECK(to_json(read(Json::parse(text))).dump() == text);
}

}  // namespace

TEST_CASE("scalars round-trip, surds included") {
  const ExactScalar r = ExactScalar::root_of(make_extension(GaussianRational(-7)));
  for (const ExactScalar& x : {q("0"), q("-3/4+2i"), q("1/2") * r + q("i")}) {
    const std::string text = scalar_to_json(x).dump();
    CHECK(scalar_to_json(scalar_from_json(Json::parse(text))).dump() == text);
    CHECK(scalar_from_json(Json::parse(text)) == x);
  }
}

TEST_CASE("structured values round-trip byte-identically") {
  const Lattice lat = make_lattice(q("i/2"));
  round_trip(parse_sigma_poly("s z^2 - 3z + 1/2", lat), sigma_poly_from_json);
  const PearsonPair p(Poly({q("89/900"), q("0"), q("1")}), Poly({q("-2/15"), q("1")}), lat);
  round_trip(solve_pearson_moments(p, SigmaScalar(1), 6), functional_from_json);
  round_trip(dual_D(solve_pearson_moments(p, SigmaScalar(1), 6)), functional_from_json);
  round_trip(recurrence_coeffs(p, 5), table_from_json);
  round_trip(rodrigues(p, 4), rodrigues_from_json);
  round_trip(FamilyDescriptor::H(q("-3"), q("2"), q("2i")), descriptor_from_json);
}

TEST_CASE("table documents are validated") {
  Json j = to_json(RecurrenceTable({q("1"), q("2")}, {q("3")}));
  j["h"][1] = "4";
  CHECK_THROWS(table_from_json(j));
  Json k = to_json(RecurrenceTable({q("1"), q("2")}, {q("3")}));
  k["C"][0] = "0";
  CHECK_THROWS(table_from_json(k));
}

TEST_CASE("classification JSON carries the documented keys") {
  const Lattice lat = make_lattice(q("1/3"));
  const PearsonPair p(Poly({q("89/900"), q("0"), q("1")}), Poly({q("-2/15"), q("1")}), lat);
  const Json j = to_json(classify(p));
  CHECK(j.at("case") == "DegPhi2");
  CHECK(j.at("family") == "Q");
  CHECK(j.at("map").contains("lambda"));
  CHECK(j.at("map").contains("mu"));
  CHECK(j.at("symmetric_params").contains("r1r2"));
  CHECK(j.at("symmetric_params").contains("r1sq_plus_r2sq"));
}
