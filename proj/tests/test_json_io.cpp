#include "doctest.h"

#include "toricode/errors.hpp"
#include "toricode/json_io.hpp"

#include <string>
#include <vector>

using namespace toricode;

TEST_CASE("json_to_int accepts numbers and decimal strings") {
  CHECK(json_to_int(Json(42), "$") == 42);
  CHECK(json_to_int(Json(-3), "$") == -3);
  CHECK(json_to_int(Json("123"), "$") == 123);
  CHECK(json_to_int(Json("-7"), "$") == -7);
  CHECK(json_to_int(Json("+8"), "$") == 8);

  // beyond int64 as a string, and beyond int64 as a parsed unsigned number
  CHECK(json_to_int(Json("340282366920938463463374607431768211456"), "$") ==
        Int(1) << 128);
  CHECK(json_to_int(Json::parse("18446744073709551615"), "$") ==
        Int("18446744073709551615"));
  CHECK(json_to_int(Json::parse("9223372036854775808"), "$") ==
        Int("9223372036854775808"));

  CHECK_THROWS_WITH_AS(json_to_int(Json("12x"), "$.n"),
                       "$.n: expected a decimal integer string, got \"12x\"", validation_error);
  CHECK_THROWS_WITH_AS(json_to_int(Json(""), "$.n"),
                       "$.n: expected a decimal integer string, got \"\"", validation_error);
  CHECK_THROWS_WITH_AS(json_to_int(Json(1.5), "$.n"),
                       "$.n: expected an integer (number or decimal string)", validation_error);
  CHECK_THROWS_AS(json_to_int(Json(true), "$.n"), validation_error);
  CHECK_THROWS_AS(json_to_int(Json(), "$.n"), validation_error);
}

TEST_CASE("json_to_vector and json_to_matrix") {
  const IntVec v = json_to_vector(Json::parse(R"([1, "2", -3])"), "$.v");
  CHECK(same_matrix(v, int_vec({1, 2, -3})));

  CHECK_THROWS_WITH_AS(json_to_vector(Json(7), "$.v"),
                       "$.v: expected an array of integers", validation_error);
  CHECK_THROWS_WITH_AS(json_to_vector(Json::parse(R"([1, [], 3])"), "$.v"),
                       "$.v[1]: expected an integer (number or decimal string)",
                       validation_error);

  const IntMat m = json_to_matrix(Json::parse(R"([[1, 2], ["3", 4]])"), "$.m");
  CHECK(same_matrix(m, int_mat({{1, 2}, {3, 4}})));
  CHECK(json_to_matrix(Json::array(), "$.m").rows() == 0);

  CHECK_THROWS_WITH_AS(json_to_matrix(Json(7), "$.m"),
                       "$.m: expected an array of rows", validation_error);
  CHECK_THROWS_WITH_AS(json_to_matrix(Json::parse(R"([1, 2])"), "$.m"),
                       "$.m[0]: expected an array of integers", validation_error);
  CHECK_THROWS_WITH_AS(json_to_matrix(Json::parse(R"([[1, 2], [3, 4, 5]])"), "$.m"),
                       "$.m[1]: expected 2 entries to match row 0, got 3", validation_error);
  CHECK_THROWS_WITH_AS(json_to_matrix(Json::parse(R"([[1], ["x"]])"), "$.m"),
                       "$.m[1][0]: expected a decimal integer string, got \"x\"",
                       validation_error);
}

TEST_CASE("integer emission switches to strings beyond double-safe range") {
  const Int safe = (Int(1) << 53) - 1;
  CHECK(int_to_json(safe).is_number());
  CHECK(int_to_json(-safe).is_number());
  CHECK(int_to_json(safe + 1).is_string());
  CHECK(int_to_json(-(safe + 1)).is_string());
  CHECK(int_to_json(safe + 1).get<std::string>() == "9007199254740992");

  // matrices always emit strings, so they re-parse exactly at any size
  const Json m = matrix_to_json(int_mat({{1, -2}, {3, 4}}));
  CHECK(m[0][0].is_string());
  CHECK(m == Json::parse(R"([["1", "-2"], ["3", "4"]])"));

  IntMat big(1, 2);
  big(0, 0) = Int(1) << 100;
  big(0, 1) = -(Int(1) << 90);
  CHECK(same_matrix(json_to_matrix(matrix_to_json(big), "$"), big));

  const Json v = vector_to_json(int_vec({5, -6}));
  CHECK(v == Json::parse("[5, -6]"));
  CHECK(same_matrix(json_to_vector(v, "$"), int_vec({5, -6})));

  CHECK(factors_to_json({Int(1), Int(6)}) == Json::parse("[1, 6]"));
}

TEST_CASE("json_to_field") {
  const FieldSpec f7 = json_to_field(Json::parse(R"({"p": 7})"), "$.field");
  CHECK(f7.kind == FieldSpec::Kind::finite);
  CHECK(f7.field->q() == 7);

  const FieldSpec f16 =
      json_to_field(Json::parse(R"({"p": 2, "k": 4, "modulus": [1, 1, 0, 0, 1]})"), "$.field");
  CHECK(f16.field->q() == 16);
  CHECK(f16.field->modulus() == std::vector<std::int64_t>{1, 1, 0, 0, 1});

  CHECK(json_to_field(Json::parse(R"({"kind": "real"})"), "$.field").kind ==
        FieldSpec::Kind::real);
  CHECK(json_to_field(Json::parse(R"({"kind": "complex"})"), "$.field").kind ==
        FieldSpec::Kind::complex);

  CHECK_THROWS_WITH_AS(json_to_field(Json(3), "$.field"),
                       "$.field: expected a field object", validation_error);
  CHECK_THROWS_WITH_AS(json_to_field(Json::parse(R"({"kind": "rational"})"), "$.field"),
                       "$.field.kind: expected \"real\" or \"complex\", got \"rational\"",
                       validation_error);
  CHECK_THROWS_WITH_AS(json_to_field(Json::parse(R"({})"), "$.field"),
                       "$.field: expected either \"kind\" or \"p\"", validation_error);
  CHECK_THROWS_WITH_AS(json_to_field(Json::parse(R"({"p": 1})"), "$.field"),
                       "$.field.p: expected a prime between 2 and 2^31", validation_error);
  CHECK_THROWS_WITH_AS(json_to_field(Json::parse(R"({"p": 7, "k": 0})"), "$.field"),
                       "$.field.k: expected an extension degree in [1, 62]", validation_error);
  CHECK_THROWS_WITH_AS(
      json_to_field(Json::parse(R"({"p": 5, "k": 2, "modulus": [7, 0, 1]})"), "$.field"),
      "$.field.modulus[0]: expected a coefficient in [0, p)", validation_error);
  // structural checks pass but the polynomial factors, which the field ctor sees
  CHECK_THROWS_WITH_AS(
      json_to_field(Json::parse(R"({"p": 2, "k": 2, "modulus": [1, 0, 1]})"), "$.field"),
      "modulus is reducible", validation_error);
}

TEST_CASE("variety_from_problem") {
  const ToricVariety direct = variety_from_problem(Json::parse(R"({"hirzebruch": 2})"));
  CHECK(direct.hirzebruch_l == 2);
  CHECK(same_matrix(direct.phi, hirzebruch(2).phi));

  // the same rays given explicitly produce the same surface, but nothing
  // marks it as a Hirzebruch special case
  const ToricVariety raw =
      variety_from_problem(Json::parse(R"({"rays": [[1,0],[0,1],[-1,2],[0,-1]]})"));
  CHECK(same_matrix(raw.phi, direct.phi));
  CHECK_FALSE(raw.hirzebruch_l.has_value());

  CHECK_THROWS_WITH_AS(variety_from_problem(Json::parse(R"({})")),
                       "$: expected exactly one of \"rays\" or \"hirzebruch\"",
                       validation_error);
  CHECK_THROWS_WITH_AS(
      variety_from_problem(Json::parse(R"({"rays": [[1,0]], "hirzebruch": 1})")),
      "$: expected exactly one of \"rays\" or \"hirzebruch\"", validation_error);
  CHECK_THROWS_WITH_AS(variety_from_problem(Json::parse(R"({"hirzebruch": 0})")),
                       "$.hirzebruch: expected a positive integer parameter", validation_error);
  CHECK_THROWS_AS(variety_from_problem(Json::parse(R"({"rays": [[1,0],[0,1]]})")),
                  validation_error);
}

TEST_CASE("subgroup_from_problem") {
  const ToricVariety h2 = hirzebruch(2);
  const SubgroupSpec by_u = subgroup_from_problem(
      Json::parse(R"({"lattice": {"in_u_coords": [[3, 0], [0, 5]]}})"), h2);
  CHECK(by_u.invariant_factors == std::vector<Int>{1, 15});

  // the same lattice through ambient generators 3u1 and 5u2
  const SubgroupSpec by_z = subgroup_from_problem(
      Json::parse(R"({"lattice": {"in_z_coords": [[3, 0, -3, 0], [0, 5, 10, -5]]}})"), h2);
  CHECK(lattice_equal(by_z.lattice, by_u.lattice));
  CHECK(by_z.invariant_factors == by_u.invariant_factors);

  CHECK_THROWS_WITH_AS(subgroup_from_problem(Json::parse(R"({})"), h2),
                       "$: expected a \"lattice\" object", validation_error);
  CHECK_THROWS_WITH_AS(subgroup_from_problem(Json::parse(R"({"lattice": 3})"), h2),
                       "$.lattice: expected an object", validation_error);
  CHECK_THROWS_WITH_AS(
      subgroup_from_problem(Json::parse(R"({"lattice": {}})"), h2),
      "$.lattice: expected exactly one of \"in_u_coords\" or \"in_z_coords\"",
      validation_error);
  CHECK_THROWS_WITH_AS(
      subgroup_from_problem(
          Json::parse(R"({"lattice": {"in_u_coords": [[1,0],[0,1]], "in_z_coords": []}})"), h2),
      "$.lattice: expected exactly one of \"in_u_coords\" or \"in_z_coords\"",
      validation_error);
  CHECK_THROWS_WITH_AS(
      subgroup_from_problem(Json::parse(R"({"lattice": {"in_z_coords": [[1, 0, -1]]}})"), h2),
      "$.lattice.in_z_coords: expected vectors of length 4, got 3", validation_error);
}

TEST_CASE("field_label") {
  CHECK(field_label(json_to_field(Json::parse(R"({"p": 2, "k": 4})"), "$")) == "GF(16)");
  CHECK(field_label(FieldSpec::reals()) == "real");
  CHECK(field_label(FieldSpec::complexes()) == "complex");
}
