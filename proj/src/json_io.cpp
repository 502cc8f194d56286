#include "toricode/json_io.hpp"

#include "toricode/errors.hpp"

#include <cctype>
#include <cstdint>

namespace toricode {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& expected) {
  throw validation_error(path + ": " + expected);
}

bool decimal_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string elem(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Int json_to_int(const Json& j, const std::string& path) {
  // the unsigned check must come first: is_number_integer() is also true for
  // unsigned values, and those above 2^63-1 would wrap through int64_t
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!decimal_literal(s)) fail(path, "expected a decimal integer string, got \"" + s + "\"");
    return Int(s[0] == '+' ? s.substr(1) : s);  // gmp rejects an explicit plus sign
  }
  fail(path, "expected an integer (number or decimal string)");
}

IntVec json_to_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  IntVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = json_to_int(j[i], elem(path, i));
  return v;
}

IntMat json_to_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.empty()) return IntMat(0, 0);
  if (!j[0].is_array()) fail(elem(path, 0), "expected an array of integers");
  const std::size_t cols = j[0].size();
  IntMat m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) fail(elem(path, i), "expected an array of integers");
    if (j[i].size() != cols)
      fail(elem(path, i), "expected " + std::to_string(cols) + " entries to match row 0, got " +
                              std::to_string(j[i].size()));
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(i), static_cast<Index>(c)) =
          json_to_int(j[i][c], elem(elem(path, i), c));
  }
  return m;
}

FieldSpec json_to_field(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a field object");
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) fail(path + ".kind", "expected \"real\" or \"complex\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "real") return FieldSpec::reals();
    if (kind == "complex") return FieldSpec::complexes();
    fail(path + ".kind", "expected \"real\" or \"complex\", got \"" + kind + "\"");
  }
  if (!j.contains("p")) fail(path, "expected either \"kind\" or \"p\"");
  const Int p_big = json_to_int(j["p"], path + ".p");
  if (p_big < 2 || p_big > (Int(1) << 31))
    fail(path + ".p", "expected a prime between 2 and 2^31");
  const auto p = p_big.convert_to<std::int64_t>();
  std::int64_t k = 1;
  if (j.contains("k")) {
    const Int k_big = json_to_int(j["k"], path + ".k");
    if (k_big < 1 || k_big > 62) fail(path + ".k", "expected an extension degree in [1, 62]");
    k = k_big.convert_to<std::int64_t>();
  }
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) fail(path + ".modulus", "expected an array of coefficients");
    std::vector<std::int64_t> mod;
    for (std::size_t i = 0; i < j["modulus"].size(); ++i) {
      const Int c = json_to_int(j["modulus"][i], elem(path + ".modulus", i));
      if (c < 0 || c >= p_big)
        fail(elem(path + ".modulus", i), "expected a coefficient in [0, p)");
      mod.push_back(c.convert_to<std::int64_t>());
    }
    return FieldSpec::finite_field(p, k, std::move(mod));
  }
  return FieldSpec::finite_field(p, k);
}

ToricVariety variety_from_problem(const Json& problem) {
  if (!problem.is_object()) fail("$", "expected a JSON object");
  const bool has_rays = problem.contains("rays");
  const bool has_h = problem.contains("hirzebruch");
  if (has_rays == has_h)
    fail("$", "expected exactly one of \"rays\" or \"hirzebruch\"");
  if (has_h) {
    const Int l = json_to_int(problem["hirzebruch"], "$.hirzebruch");
    if (l < 1 || l > 1000000) fail("$.hirzebruch", "expected a positive integer parameter");
    return hirzebruch(l.convert_to<long>());
  }
  return make_toric_variety(json_to_matrix(problem["rays"], "$.rays"));
}

SubgroupSpec subgroup_from_problem(const Json& problem, const ToricVariety& x) {
  if (!problem.contains("lattice")) fail("$", "expected a \"lattice\" object");
  const Json& lat = problem["lattice"];
  if (!lat.is_object()) fail("$.lattice", "expected an object");
  const bool has_u = lat.contains("in_u_coords");
  const bool has_z = lat.contains("in_z_coords");
  if (has_u == has_z)
    fail("$.lattice", "expected exactly one of \"in_u_coords\" or \"in_z_coords\"");
  if (has_u)
    return make_subgroup(x, json_to_matrix(lat["in_u_coords"], "$.lattice.in_u_coords"));
  // each entry is one ambient generator; the library wants them as columns
  const IntMat gens = json_to_matrix(lat["in_z_coords"], "$.lattice.in_z_coords");
  if (gens.cols() != x.rays())
    fail("$.lattice.in_z_coords",
         "expected vectors of length " + std::to_string(x.rays()) + ", got " +
             std::to_string(gens.cols()));
  return make_subgroup_from_ambient(x, gens.transpose());
}

Json int_to_json(const Int& v) {
  static const Int safe = (Int(1) << 53) - 1;
  if (v >= -safe && v <= safe) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json vector_to_json(const IntVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(int_to_json(v(i)));
  return a;
}

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json factors_to_json(const std::vector<Int>& factors) {
  Json a = Json::array();
  for (const Int& f : factors) a.push_back(int_to_json(f));
  return a;
}

std::string field_label(const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::real:
      return "real";
    case FieldSpec::Kind::complex:
      return "complex";
    case FieldSpec::Kind::finite:
      return "GF(" + std::to_string(f.field->q()) + ")";
  }
  return "?";
}

}  // namespace toricode
