#include "emax/report.hpp"

#include <cmath>
#include <sstream>

namespace emax {

Json Formatter::number(double value) const {
  if (!std::isfinite(value)) return nullptr;
  return round_significant(value, precision_);
}

Json Formatter::exact_or_number(const std::optional<Rational>& exact, const Real& approx) const {
  if (exact) return to_string(*exact);
  return number(approx);
}

Json Formatter::exact(const std::optional<Rational>& value) {
  if (value) return to_string(*value);
  return nullptr;
}

Json candidate_row(const EMCandidate& cand, const RuledSurface& surface, const Formatter& fmt) {
  Json row = Json::object();
  row["x"] = fmt.number(to_double(cand.x));
  row["b"] = fmt.number(cand.b);
  row["c"] = fmt.exact_or_number(cand.c_exact, cand.c);
  row["A"] = fmt.number(cand.A);
  row["verdict"] = std::string(to_string(cand.verdict.status));
  if (cand.is_solution()) {
    EHReport eh = eh_value(cand, surface);
    row["eh"] = fmt.number(eh.eh);
    row["kahler_bound"] = fmt.number(eh.kahler_yamabe_bound);
    row["aubin"] = fmt.number(eh.aubin_bound);
    row["exceeds_aubin"] = eh.exceeds_aubin;
    row["negative_eh"] = eh.negative_eh;
  } else {
    for (const char* key : {"eh", "kahler_bound", "aubin", "exceeds_aubin", "negative_eh"}) row[key] = nullptr;
  }
  return row;
}

Json candidate_detail(const EMCandidate& cand, const RuledSurface& surface, const Formatter& fmt) {
  Json row = candidate_row(cand, surface, fmt);
  row["case"] = std::string(to_string(cand.solution_case));
  row["x_exact"] = to_string(cand.x);
  row["b_exact"] = Formatter::exact(cand.b_exact);
  row["c_exact"] = Formatter::exact(cand.c_exact);
  row["A_exact"] = Formatter::exact(cand.A_exact);
  row["witness"] = Formatter::exact(cand.verdict.witness);
  if (cand.is_solution()) {
    EHReport eh = eh_value(cand, surface);
    row["scal_h"] = fmt.number(eh.scal_h);
    row["vol_h"] = fmt.number(eh.vol_h);
    row["improves_bound"] = eh.improves_bound;
  } else {
    row["scal_h"] = fmt.number(cand.A);
    row["vol_h"] = nullptr;
    row["improves_bound"] = nullptr;
  }
  Json coefficients = Json::array();
  if (cand.F_exact) {
    for (const auto& q : cand.F_exact->coefficients()) coefficients.push_back(to_string(q));
  } else {
    for (const auto& r : cand.F.coefficients()) coefficients.push_back(fmt.number(r));
  }
  row["F"] = std::move(coefficients);
  return row;
}

Json moduli_row(const ModuliEntry& entry, const Formatter& fmt) {
  Json row = Json::object();
  row["k"] = entry.k;
  row["degree"] = entry.degree;
  row["x"] = fmt.number(to_double(entry.x));
  row["admitted"] = entry.admitted;
  row["verdict"] = entry.solved ? std::string(to_string(entry.solved->verdict.status)) : std::string("reference");
  row["eh"] = fmt.number(entry.eh);
  row["positivity_bound"] = entry.positivity_bound;
  row["p_bound"] = entry.p_bound;
  return row;
}

std::string to_json(const Report& report) {
  Json doc = Json::object();
  doc["command"] = report.command;
  doc["inputs"] = report.inputs;
  doc["results"] = report.results;
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_cell(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return value.dump();
}

void write_rows(std::ostringstream& out, const std::vector<const Json*>& rows) {
  std::vector<std::string> header;
  for (const auto& [key, value] : rows.front()->items())
    if (!value.is_structured()) header.push_back(key);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const Json* row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto it = row->find(header[i]);
      out << (i ? "," : "") << (it == row->end() ? std::string() : csv_cell(*it));
    }
    out << "\n";
  }
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  std::vector<const Json*> rows;
  if (auto it = report.results.find("rows"); it != report.results.end()) {
    for (const auto& row : *it) rows.push_back(&row);
  } else {
    rows.push_back(&report.results);
  }
  if (!rows.empty()) write_rows(out, rows);
  return out.str();
}

}  // namespace emax
