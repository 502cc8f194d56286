#include "toricode/errors.hpp"
#include "toricode/json_io.hpp"
#include "toricode/smith.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace toricode;

Json read_problem(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw validation_error("input is not valid JSON");
  if (!j.is_object()) throw validation_error("$: expected a JSON object");
  return j;
}

const Json& require_key(const Json& in, const char* key) {
  if (!in.contains(key))
    throw validation_error(std::string("$: expected a \"") + key + "\" key");
  return in[key];
}

std::string factor_list(const std::vector<Int>& factors) {
  std::string s = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ", ";
    s += factors[i].str();
  }
  return s + ")";
}

void emit(const Json& out) { std::cout << out.dump(2) << "\n"; }

std::string point_text(const GaloisField& f, const TorusPoint& p) {
  std::string coords = "(";
  std::string coeffs;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) {
      coords += ", ";
      coeffs += ", ";
    }
    coords += f.to_string(p.coords[i]);
    const auto cs = f.coeffs(p.coords[i]);
    coeffs += "[";
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (c) coeffs += ",";
      coeffs += std::to_string(cs[c]);
    }
    coeffs += "]";
  }
  return coords + ")  =  " + coeffs;
}

Json point_json(const GaloisField& f, const TorusPoint& p) {
  Json coords = Json::array();
  Json coeffs = Json::array();
  for (const std::int64_t c : p.coords) {
    coords.push_back(f.to_string(c));
    coeffs.push_back(f.coeffs(c));
  }
  Json out;
  out["coords"] = std::move(coords);
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json subgroup_json(const SubgroupSpec& s) {
  Json out;
  out["ml"] = matrix_to_json(s.ml);
  out["factors"] = factors_to_json(s.invariant_factors);
  out["order"] = int_to_json(s.order());
  return out;
}

int cmd_snf(const Json& in, bool as_json) {
  const auto s = smith_normal_form(json_to_matrix(require_key(in, "matrix"), "$.matrix"));
  if (as_json) {
    Json out;
    out["d"] = matrix_to_json(s.d);
    out["a"] = matrix_to_json(s.a);
    out["c"] = matrix_to_json(s.c);
    out["factors"] = factors_to_json(s.invariant_factors);
    emit(out);
  } else {
    std::cout << "A * M * C = D with A, C unimodular\n";
    std::cout << "D =\n" << to_string(s.d) << "\n";
    std::cout << "A =\n" << to_string(s.a) << "\n";
    std::cout << "C =\n" << to_string(s.c) << "\n";
    std::cout << "invariant factors: " << factor_list(s.invariant_factors) << "\n";
  }
  return 0;
}

int cmd_count(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  std::vector<FieldSpec> fields;
  if (in.contains("fields")) {
    const Json& list = in["fields"];
    if (!list.is_array()) throw validation_error("$.fields: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i)
      fields.push_back(json_to_field(list[i], "$.fields[" + std::to_string(i) + "]"));
  } else if (in.contains("field")) {
    fields.push_back(json_to_field(in["field"], "$.field"));
  } else {
    throw validation_error("$: expected a \"fields\" array or a \"field\" object");
  }
  if (as_json) {
    Json out;
    out["factors"] = factors_to_json(s.invariant_factors);
    out["order"] = int_to_json(s.order());
    Json counts = Json::array();
    for (const auto& f : fields) {
      Json row;
      row["field"] = field_label(f);
      row["count"] = int_to_json(count_points(s, f));
      counts.push_back(std::move(row));
    }
    out["counts"] = std::move(counts);
    emit(out);
  } else {
    std::cout << "subgroup factors " << factor_list(s.invariant_factors) << ", order "
              << s.order() << "\n";
    for (const auto& f : fields)
      std::cout << field_label(f) << ": " << count_points(s, f) << "\n";
  }
  return 0;
}

std::shared_ptr<const GaloisField> finite_field_from(const Json& in) {
  const FieldSpec spec = json_to_field(require_key(in, "field"), "$.field");
  if (spec.kind != FieldSpec::Kind::finite)
    throw validation_error("$.field: this command needs a finite field");
  return spec.field;
}

int cmd_enumerate(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  const auto f = finite_field_from(in);
  const ParamMatrix pm = parameterize(s, f);
  const auto points = enumerate_points(s, f);
  if (as_json) {
    Json out;
    out["q"] = f->q();
    out["factors"] = factors_to_json(s.invariant_factors);
    out["order"] = int_to_json(s.order());
    out["q_matrix"] = matrix_to_json(pm.q_matrix);
    Json gens = Json::array();
    for (const auto& g : pm.generators) gens.push_back(point_json(*f, g));
    out["generators"] = std::move(gens);
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(point_json(*f, p));
    out["points"] = std::move(pts);
    emit(out);
  } else {
    std::cout << "GF(" << f->q() << "), generator g, subgroup factors "
              << factor_list(s.invariant_factors) << "\n";
    std::cout << "exponent matrix (row i generates the factor of order "
              << "d_i):\n"
              << to_string(pm.q_matrix) << "\n";
    for (std::size_t i = 0; i < pm.generators.size(); ++i)
      std::cout << "generator " << i + 1 << ": " << point_text(*f, pm.generators[i]) << "\n";
    std::cout << points.size() << " points:\n";
    for (const auto& p : points) std::cout << "  " << point_text(*f, p) << "\n";
  }
  return 0;
}

int cmd_code(const Json& in, bool as_json, const DistanceOptions& opts) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  const auto f = finite_field_from(in);
  const IntVec alpha = json_to_vector(require_key(in, "alpha"), "$.alpha");
  const ToricCode code = build_code(s, f, alpha);
  Json out;
  out["alpha"] = vector_to_json(alpha);
  out["N"] = static_cast<std::int64_t>(code.length());
  out["K"] = static_cast<std::int64_t>(code.dim());
  out["monomials"] = code.basis.size();
  if (code.dim() == 0) {
    out["delta"] = nullptr;
    if (as_json) {
      emit(out);
    } else {
      std::cout << "[N, K] = [" << code.length() << ", 0]: the zero code "
                << "(no monomials of this degree evaluate to anything new)\n";
    }
    return 0;
  }
  const Int delta = minimum_distance_exhaustive(code, opts);
  out["delta"] = int_to_json(delta);
  if (as_json) {
    emit(out);
  } else {
    std::cout << "[N, K, delta] = [" << code.length() << ", " << code.dim() << ", " << delta
              << "]\n";
  }
  return 0;
}

int cmd_table(long l, long c1, long c2, std::int64_t q, bool as_json,
              const DistanceOptions& opts) {
  const auto rows = table_sweep(l, c1, c2, q, opts);
  bool any_mismatch = false;
  if (as_json) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["alpha"] = vector_to_json(row.alpha);
      r["N"] = int_to_json(row.n);
      r["K"] = int_to_json(row.k);
      r["delta"] = int_to_json(row.delta);
      r["method"] = row.method;
      if (row.mismatch) {
        r["mismatch"] = true;
        any_mismatch = true;
      }
      out.push_back(std::move(r));
    }
    emit(out);
  } else {
    std::cout << std::left << std::setw(12) << "alpha" << std::right << std::setw(6) << "N"
              << std::setw(6) << "K" << std::setw(8) << "delta"
              << "  method\n";
    for (const auto& row : rows) {
      const std::string alpha =
          "(" + row.alpha(0).str() + ", " + row.alpha(1).str() + ")";
      std::cout << std::left << std::setw(12) << alpha << std::right << std::setw(6)
                << row.n.str() << std::setw(6) << row.k.str() << std::setw(8)
                << row.delta.str() << "  " << row.method
                << (row.mismatch ? "  MISMATCH" : "") << "\n";
      if (row.mismatch) any_mismatch = true;
    }
  }
  if (any_mismatch) {
    std::cerr << "warning: closed form and brute force disagree on flagged rows\n";
  }
  return 0;
}

int cmd_check(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const IntMat qm = json_to_matrix(require_key(in, "q_matrix"), "$.q_matrix");
  const Int q = json_to_int(require_key(in, "q"), "$.q");
  if (q < 2) throw validation_error("$.q: expected a prime power of at least 2");
  const YqReport rep = check_yq_correspondence(x, qm, q);
  if (as_json) {
    Json out;
    out["q"] = int_to_json(q);
    out["lq_in_grading_kernel"] = rep.lq_in_grading_kernel;
    out["saturation_holds"] = rep.saturation_holds;
    out["lattices_agree"] = rep.lattices_agree;
    out["combined"] = subgroup_json(rep.combined);
    out["point_set"] = subgroup_json(rep.point_set);
    emit(out);
  } else {
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "ker Q inside the relation lattice of the torus: "
              << yn(rep.lq_in_grading_kernel) << "\n";
    std::cout << "image of the relation lattice saturated at q-1: "
              << yn(rep.saturation_holds) << "\n";
    std::cout << "lattice combination: factors "
              << factor_list(rep.combined.invariant_factors) << ", order "
              << rep.combined.order() << "\n";
    std::cout << "parameterized point set: factors "
              << factor_list(rep.point_set.invariant_factors) << ", order "
              << rep.point_set.order() << "\n";
    std::cout << "lattices agree: " << yn(rep.lattices_agree) << "\n";
  }
  return 0;
}

int cmd_correct_lattice(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  const Int q = json_to_int(require_key(in, "q"), "$.q");
  if (q < 2) throw validation_error("$.q: expected a prime power of at least 2");
  const SubgroupSpec fixed = correct_lattice(s, q);
  if (as_json) {
    Json out;
    out["q"] = int_to_json(q);
    out["before"] = subgroup_json(s);
    out["after"] = subgroup_json(fixed);
    emit(out);
  } else {
    std::cout << "factors over Z: " << factor_list(s.invariant_factors) << ", order "
              << s.order() << "\n";
    std::cout << "corrected for GF(" << q << "): factors "
              << factor_list(fixed.invariant_factors) << ", order " << fixed.order() << "\n";
    std::cout << "corrected ML =\n" << to_string(fixed.ml) << "\n";
  }
  return 0;
}

int cmd_hilbert(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  const IntVec alpha = json_to_vector(require_key(in, "alpha"), "$.alpha");
  const Int value = hilbert_function(s, alpha);
  const auto monomials = monomial_basis(x, alpha);
  if (as_json) {
    Json out;
    out["alpha"] = vector_to_json(alpha);
    out["monomials"] = monomials.size();
    out["value"] = int_to_json(value);
    emit(out);
  } else {
    std::cout << monomials.size() << " monomials in " << value
              << " classes at this degree\n";
  }
  return 0;
}

int cmd_degree(const Json& in, bool as_json) {
  const ToricVariety x = variety_from_problem(in);
  const SubgroupSpec s = subgroup_from_problem(in, x);
  const BinomialGenerators gens = binomial_generators(s);
  const Int deg = ideal_degree(s);
  const Int mv = segment_mixed_volume(s);
  if (as_json) {
    Json out;
    out["factors"] = factors_to_json(s.invariant_factors);
    out["degree"] = int_to_json(deg);
    out["mixed_volume"] = int_to_json(mv);
    out["complete_intersection"] = gens.complete_intersection;
    Json bs = Json::array();
    for (const auto& b : gens.gens) bs.push_back(to_string(b));
    out["binomials"] = std::move(bs);
    emit(out);
  } else {
    std::cout << "generators:\n";
    for (const auto& b : gens.gens) std::cout << "  " << to_string(b) << "\n";
    std::cout << "complete intersection: " << (gens.complete_intersection ? "yes" : "no")
              << "\n";
    std::cout << "degree = " << deg << ", segment mixed volume = " << mv << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite torus subgroups cut out by lattices, and evaluation codes on them"};
  app.fallthrough();
  bool as_json = false;
  int threads = 1;
  std::int64_t budget = 10'000'000;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--threads", threads, "worker threads for the distance search")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "codeword budget for the distance search")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string input;
  const char* input_help = "JSON problem file (default: stdin)";
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("input", input, input_help);
  auto* count = app.add_subcommand("count", "point counts of a subgroup over a field list");
  count->add_option("input", input, input_help);
  auto* enumerate = app.add_subcommand("enumerate", "generators and points over GF(q)");
  enumerate->add_option("input", input, input_help);
  auto* code = app.add_subcommand("code", "evaluation code parameters [N, K, delta]");
  code->add_option("input", input, input_help);
  auto* check = app.add_subcommand("check", "compare a monomial parameterization "
                                            "against the lattice it should cut out");
  check->add_option("input", input, input_help);
  auto* correct = app.add_subcommand("correct-lattice", "rescale a lattice to be full over GF(q)");
  correct->add_option("input", input, input_help);
  auto* hilbert = app.add_subcommand("hilbert", "monomial class count at a degree");
  hilbert->add_option("input", input, input_help);
  auto* degree = app.add_subcommand("degree", "binomial generators and lattice ideal degree");
  degree->add_option("input", input, input_help);

  long l = 0, c1 = 0, c2 = 0;
  std::int64_t q = 0;
  auto* table = app.add_subcommand("table", "sweep all degrees of the (c1, c2) grid on H_l");
  table->add_option("l", l, "Hirzebruch parameter")->required();
  table->add_option("c1", c1, "first cyclic order")->required();
  table->add_option("c2", c2, "second cyclic order")->required();
  table->add_option("q", q, "field size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    DistanceOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    if (snf->parsed()) return cmd_snf(read_problem(input), as_json);
    if (count->parsed()) return cmd_count(read_problem(input), as_json);
    if (enumerate->parsed()) return cmd_enumerate(read_problem(input), as_json);
    if (code->parsed()) return cmd_code(read_problem(input), as_json, opts);
    if (table->parsed()) return cmd_table(l, c1, c2, q, as_json, opts);
    if (check->parsed()) return cmd_check(read_problem(input), as_json);
    if (correct->parsed()) return cmd_correct_lattice(read_problem(input), as_json);
    if (hilbert->parsed()) return cmd_hilbert(read_problem(input), as_json);
    if (degree->parsed()) return cmd_degree(read_problem(input), as_json);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
