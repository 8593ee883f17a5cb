#include "wrlat/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "wrlat/errors.hpp"

namespace wrlat {

json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_float())
    throw ParseError("floating-point entries are not accepted; use \"p/q\"");
  throw ParseError("expected an integer or a \"p/q\" string");
}

json vec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& c : v) {
    if (c.fits_slong_p())
      out.push_back(c.get_si());
    else
      out.push_back(c.get_str());
  }
  return out;
}

IntVec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  IntVec v;
  for (const json& c : j) {
    if (c.is_number_integer()) {
      v.push_back(Int(static_cast<long>(c.get<std::int64_t>())));
    } else if (c.is_string()) {
      Rat r = parse_rat(c.get<std::string>());
      if (r.get_den() != 1) throw ParseError("vector coordinates must be integers");
      v.push_back(r.get_num());
    } else {
      throw ParseError("vector coordinates must be integers");
    }
  }
  return v;
}

json gram_to_json(const SymForm& form) {
  json rows = json::array();
  for (int i = 0; i < form.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < form.dim(); ++j) row.push_back(rat_to_json(form(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

RatMatrix matrix_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("matrix must be an n x n array of rows");
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("matrix row " + std::to_string(i) + " must have n entries");
    for (int c = 0; c < n; ++c) m(i, c) = rat_from_json(row[c]);
  }
  return m;
}

}  // namespace

LatticeInput lattice_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("lattice input must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 2) throw DimensionTooSmall("lattice dimension must be at least 2");
  const bool has_gram = j.contains("gram");
  const bool has_basis = j.contains("basis");
  if (has_gram == has_basis)
    throw ParseError("provide exactly one of \"gram\" or \"basis\"");
  LatticeInput input{
      has_gram ? SymForm::from_matrix(matrix_from_json(j["gram"], n))
               : SymForm::gram_of_basis(matrix_from_json(j["basis"], n)),
      j.value("label", std::string())};
  return input;
}

LatticeInput load_lattice_file(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open input file '" + path + "'");
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return lattice_from_json(j);
}

json to_json(const MinimalVectorData& md) {
  json vectors = json::array();
  for (const IntVec& v : md.vectors) vectors.push_back(vec_to_json(v));
  return {{"systole_sq", rat_to_json(md.systole_sq)},
          {"count_with_signs", md.count_with_signs()},
          {"vectors", std::move(vectors)}};
}

json to_json(const StratumReport& report) {
  return {{"k", report.k},
          {"in_X", report.in_x},
          {"in_Y", report.in_y},
          {"index", report.index ? to_string(*report.index) : std::string("infinite")},
          {"systole_sq", rat_to_json(report.systole_sq)},
          {"normalized_invariant", rat_to_json(report.normalized_invariant)}};
}

json to_json(const ExhaustionValue& value) {
  return {{"value", value.value.str(30)},
          {"tail_bound", value.tail_bound.str(10)},
          {"truncation_radius_sq", rat_to_json(value.truncation_radius_sq)},
          {"exact", false}};
}

json to_json(const VerificationReport& report) {
  json witness = json::array();
  for (const IntVec& v : report.witness) witness.push_back(vec_to_json(v));
  json out = {{"claim", report.claim}, {"n", report.n},
              {"pass", report.pass},   {"expected_pass", report.expected_pass},
              {"detail", report.detail}, {"witness", std::move(witness)}};
  if (report.index) out["index"] = to_string(*report.index);
  return out;
}

std::string tau_decimal(const Rat& ratio, int n) {
  Real tau = log(rat_to_real(ratio)) / (2 * n);
  return tau.str(30);
}

json trace_step_to_json(const RetractionStep& step) {
  json joining = json::array();
  for (const IntVec& v : step.event.joining) joining.push_back(vec_to_json(v));
  return {{"r", rat_to_json(step.event.ratio)},
          {"tau_decimal", tau_decimal(step.event.ratio, step.input.dim())},
          {"joining", std::move(joining)},
          {"k_before", step.event.k_before},
          {"k_after", step.event.k_after},
          {"gram_after", gram_to_json(step.output)}};
}

json to_json(const RetractionTrace& trace, bool include_steps) {
  json out = {{"step_count", trace.steps.size()},
              {"final_gram", gram_to_json(trace.final)}};
  if (include_steps) {
    json steps = json::array();
    for (const RetractionStep& step : trace.steps)
      steps.push_back(trace_step_to_json(step));
    out["steps"] = std::move(steps);
  }
  return out;
}

}  // namespace wrlat
