#include "boxdec/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxdec {

namespace {

using json = nlohmann::ordered_json;

// Engine-side failure tagged with the operation that raised it.
struct EngineFailure : std::runtime_error {
  EngineFailure(std::string operation, const std::string& what)
      : std::runtime_error(what), operation(std::move(operation)) {}
  std::string operation;
};

template <class F>
auto engine_step(const char* operation, F&& f) {
  try {
    return f();
  } catch (const EngineFailure&) {
    throw;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw EngineFailure(operation, e.what());
  }
}

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

long json_to_long(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

IVec json_to_ivec(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  IVec v;
  for (const auto& e : j) v.push_back(json_to_long(e, what));
  return v;
}

IMat json_to_imat(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  IMat m;
  for (const auto& row : j) m.push_back(json_to_ivec(row, what));
  return m;
}

std::vector<QVec> json_to_points(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<QVec> pts;
  for (const auto& e : j) pts.push_back(json_to_qvec(e));
  return pts;
}

WeightList parse_phi(const json& doc) {
  IMat vectors = json_to_imat(require_field(doc, "phi"), "phi");
  if (vectors.empty()) throw SchemaError("phi must be non-empty");
  const int dim = static_cast<int>(vectors[0].size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim)
      throw SchemaError("phi rows must have equal length");
  try {
    return WeightList(dim, std::move(vectors));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("phi: ") + e.what());
  }
}

uint64_t parse_seed(const json& doc, const RunOptions& options) {
  if (options.seed_override) return *options.seed_override;
  const json& s = require_field(doc, "seed");
  if (!s.is_number_integer() || s.get<long long>() < 0)
    throw SchemaError("seed must be a non-negative integer");
  return s.get<uint64_t>();
}

QVec parse_eps(const json& doc, const WeightList& phi, uint64_t seed) {
  auto it = doc.find("eps");
  if (it == doc.end() || it->is_null())
    return default_generic_direction(phi, seed);
  QVec eps = json_to_qvec(*it);
  if (static_cast<int>(eps.size()) != phi.dim())
    throw SchemaError("eps has wrong dimension");
  return eps;
}

MultiplicityFunction parse_multiplicity(const json& doc, int dim) {
  const json& mj = require_field(doc, "m");
  const json* records = &mj;
  QVec shift;
  bool have_shift = false;
  if (mj.is_object()) {
    if (auto it = mj.find("shift"); it != mj.end()) {
      shift = json_to_qvec(*it);
      have_shift = true;
    }
    records = &require_field(mj, "values");
  }
  if (!records->is_array() || records->empty())
    throw SchemaError("m must list at least one {point, value} record");

  std::vector<std::pair<QVec, Rational>> entries;
  for (const auto& rec : *records) {
    if (!rec.is_object()) throw SchemaError("m records must be objects");
    QVec pt = json_to_qvec(require_field(rec, "point"));
    if (static_cast<int>(pt.size()) != dim)
      throw SchemaError("m point has wrong dimension");
    entries.emplace_back(std::move(pt), json_to_rational(require_field(rec, "value")));
  }
  if (!have_shift) {
    // shared lattice shift inferred from the fractional parts
    shift.resize(dim);
    for (int i = 0; i < dim; ++i) shift[i] = frac_part(entries[0].first[i]);
  }
  if (static_cast<int>(shift.size()) != dim)
    throw SchemaError("m shift has wrong dimension");

  MultiplicityFunction m(dim, shift);
  for (auto& [pt, val] : entries) {
    IVec offset(dim);
    for (int i = 0; i < dim; ++i) {
      Rational diff = pt[i] - shift[i];
      if (!is_integer(diff))
        throw SchemaError("m support points do not lie on one shifted lattice");
      offset[i] = static_cast<long>(floor_rational(diff).get_si());
    }
    m.add(offset, val);
  }
  return m;
}

RootDatum parse_root_datum(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a label string");
  try {
    return RootDatum::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

json contributions_to_json(const std::vector<VertexContribution>& contribs) {
  json arr = json::array();
  for (const auto& c : contribs) {
    json e;
    e["vertex"] = qvec_to_json(c.vertex.coords());
    e["value"] = cyclotomic_to_json(c.value);
    arr.push_back(std::move(e));
  }
  return arr;
}

json poly_to_json(const MultiPoly<Rational>& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["monomial"] = e;
    t["coeff"] = format_rational(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

json run_boxspline_eval(const json& doc) {
  WeightList phi = parse_phi(doc);
  QVec x = json_to_qvec(require_field(doc, "x"));
  if (static_cast<int>(x.size()) != phi.dim())
    throw SchemaError("x has wrong dimension");
  Rational value =
      engine_step("eval_box", [&] { return eval_box(phi, x); });
  json out;
  out["value"] = format_rational(value);
  return out;
}

json run_local_piece(const json& doc, const RunOptions& options) {
  WeightList phi = parse_phi(doc);
  uint64_t seed = parse_seed(doc, options);
  QVec base = json_to_qvec(require_field(doc, "base"));
  if (static_cast<int>(base.size()) != phi.dim())
    throw SchemaError("base has wrong dimension");
  QVec eps = parse_eps(doc, phi, seed);

  auto families =
      engine_step("wall_families", [&] { return wall_families(phi); });
  auto germ = engine_step("alcove_of",
                          [&] { return alcove_of(base, eps, families); });
  auto piece =
      engine_step("local_piece", [&] { return local_piece(phi, germ, seed); });

  json out;
  out["signature"] = germ.signature;
  out["degree_bound"] = piece.degree_bound;
  out["polynomial"] = poly_to_json(piece.poly);
  return out;
}

json run_vertices(const json& doc) {
  WeightList phi = parse_phi(doc);
  auto vertices =
      engine_step("vertex_set", [&] { return vertex_set(phi); });
  json arr = json::array();
  for (const auto& s : vertices) arr.push_back(qvec_to_json(s.coords()));
  json out;
  out["vertices"] = std::move(arr);
  return out;
}

json run_forward(const json& doc, const RunOptions& options) {
  WeightList phi = parse_phi(doc);
  uint64_t seed = parse_seed(doc, options);
  MultiplicityFunction m = parse_multiplicity(doc, phi.dim());
  std::vector<QVec> queries =
      json_to_points(require_field(doc, "queries"), "queries");
  for (const auto& q : queries)
    if (static_cast<int>(q.size()) != phi.dim())
      throw SchemaError("query has wrong dimension");
  QVec eps = parse_eps(doc, phi, seed);

  json out;
  auto it = doc.find("vertex");
  if (it != doc.end() && !it->is_null()) {
    // twisted forward value b(s, m) at each query, as a cyclotomic number
    TorusPoint s = engine_step("vertex", [&] { return TorusPoint(json_to_qvec(*it)); });
    auto fixed = s.fixed_indices(phi);
    PieceTable table(phi.sublist(fixed));
    json values = json::array();
    for (const auto& q : queries) {
      Cyclotomic v = engine_step("forward_piece", [&] {
        return forward_piece(m, s, phi, q, eps, table, seed).evaluate(q);
      });
      values.push_back(cyclotomic_to_json(v));
    }
    out["values"] = std::move(values);
  } else {
    PieceTable table(phi);
    json values = json::array();
    for (const auto& q : queries) {
      Rational v = engine_step("forward_piece", [&] {
        return forward_piece_identity(m, phi, q, eps, table, seed).evaluate(q);
      });
      values.push_back(format_rational(v));
    }
    out["values"] = std::move(values);
  }
  return out;
}

json run_deconvolve(const json& doc, const RunOptions& options) {
  WeightList phi = parse_phi(doc);
  uint64_t seed = parse_seed(doc, options);
  MultiplicityFunction m = parse_multiplicity(doc, phi.dim());
  std::vector<QVec> queries =
      json_to_points(require_field(doc, "queries"), "queries");
  for (const auto& q : queries)
    if (static_cast<int>(q.size()) != phi.dim())
      throw SchemaError("query has wrong dimension");
  QVec eps = parse_eps(doc, phi, seed);

  auto engine = engine_step("DeconvolutionEngine", [&] {
    return std::make_unique<DeconvolutionEngine>(m, phi, seed);
  });

  json vertices = json::array();
  for (const auto& s : engine->vertices())
    vertices.push_back(qvec_to_json(s.coords()));

  json values = json::array();
  json contributions = json::array();
  for (const auto& q : queries) {
    DeconvolutionResult r = engine_step(
        "recover_at", [&] { return engine->recover_at(q, eps); });
    values.push_back(format_rational(r.value));
    contributions.push_back(contributions_to_json(r.contributions));
  }

  json out;
  out["vertices"] = std::move(vertices);
  out["values"] = std::move(values);
  out["contributions"] = std::move(contributions);
  return out;
}

json run_verify_branching(const json& doc, const RunOptions& options,
                          int* exit_code) {
  EmbeddingSpec spec{parse_root_datum(require_field(doc, "ambient"), "ambient"),
                     parse_root_datum(require_field(doc, "subgroup"), "subgroup"),
                     json_to_imat(require_field(doc, "restriction"), "restriction")};
  if (static_cast<int>(spec.restriction.size()) != spec.subgroup.rank())
    throw SchemaError("restriction must have one row per subgroup coordinate");
  for (const auto& row : spec.restriction)
    if (static_cast<int>(row.size()) != spec.ambient.rank())
      throw SchemaError("restriction must have one column per ambient coordinate");

  IVec highest = json_to_ivec(require_field(doc, "highest"), "highest");
  if (static_cast<int>(highest.size()) != spec.ambient.rank())
    throw SchemaError("highest has wrong dimension");

  uint64_t seed = parse_seed(doc, options);
  uint64_t flip_mask = 0;
  if (auto it = doc.find("flip_mask"); it != doc.end())
    flip_mask = static_cast<uint64_t>(json_to_long(*it, "flip_mask"));

  QVec eps;
  if (auto it = doc.find("eps"); it != doc.end() && !it->is_null())
    eps = json_to_qvec(*it);

  Rational window(1);
  if (options.window_override)
    window = *options.window_override;
  else if (auto it = doc.find("window"); it != doc.end())
    window = json_to_rational(*it);
  if (window < 0) throw SchemaError("window must be non-negative");

  BranchingReport report = engine_step("verify_branching", [&] {
    return verify_branching(spec, highest, eps, seed, flip_mask,
                            /*parallel=*/true, window);
  });

  json out;
  out["phi"] = report.phi.vectors();
  json vertices = json::array();
  for (const auto& s : report.vertices)
    vertices.push_back(qvec_to_json(s.coords()));
  out["vertices"] = std::move(vertices);
  json entries = json::array();
  for (const auto& e : report.entries) {
    json ej;
    ej["nu"] = qvec_to_json(e.nu);
    ej["expected"] = format_rational(e.expected);
    ej["recovered"] = format_rational(e.recovered);
    ej["quantization"] = format_rational(e.quantization);
    entries.push_back(std::move(ej));
  }
  out["entries"] = std::move(entries);
  out["mismatches"] = report.mismatches;
  out["passed"] = report.passed();
  if (!report.passed()) *exit_code = kVerificationFailed;
  return out;
}

}  // namespace

Rational json_to_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(std::string("bad rational: ") + e.what());
    }
  }
  throw SchemaError("numbers must be integers or \"p/q\" strings");
}

QVec json_to_qvec(const json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  QVec v;
  for (const auto& e : j) v.push_back(json_to_rational(e));
  return v;
}

nlohmann::ordered_json qvec_to_json(const QVec& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(format_rational(r));
  return arr;
}

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& c) {
  json out;
  out["order"] = c.order();
  out["coeffs"] = qvec_to_json(c.coeffs());
  return out;
}

RunOutcome run_problem(const json& doc, const RunOptions& options) {
#ifdef _OPENMP
  if (options.jobs > 0) omp_set_num_threads(options.jobs);
#endif
  RunOutcome outcome{kOk, json::object()};
  try {
    if (!doc.is_object()) throw SchemaError("input must be a JSON object");
    const json& mode_j = require_field(doc, "mode");
    if (!mode_j.is_string()) throw SchemaError("mode must be a string");
    const std::string mode = mode_j.get<std::string>();

    json result;
    if (mode == "boxspline-eval") {
      result = run_boxspline_eval(doc);
    } else if (mode == "local-piece") {
      result = run_local_piece(doc, options);
    } else if (mode == "vertices") {
      result = run_vertices(doc);
    } else if (mode == "forward") {
      result = run_forward(doc, options);
    } else if (mode == "deconvolve") {
      result = run_deconvolve(doc, options);
    } else if (mode == "verify-branching") {
      result = run_verify_branching(doc, options, &outcome.exit_code);
    } else {
      throw SchemaError("unknown mode: " + mode);
    }

    outcome.output["mode"] = mode;
    outcome.output["input"] = doc;
    for (auto& [k, v] : result.items()) outcome.output[k] = std::move(v);
  } catch (const SchemaError& e) {
    outcome.exit_code = kSchemaError;
    outcome.output = json::object();
    outcome.output["error"] = e.what();
    outcome.output["kind"] = "schema";
  } catch (const EngineFailure& e) {
    outcome.exit_code = kEngineError;
    outcome.output = json::object();
    outcome.output["error"] = e.what();
    outcome.output["kind"] = "engine";
    outcome.output["operation"] = e.operation;
  } catch (const std::exception& e) {
    outcome.exit_code = kEngineError;
    outcome.output = json::object();
    outcome.output["error"] = e.what();
    outcome.output["kind"] = "engine";
  }
  return outcome;
}

}  // namespace boxdec
