#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latsum/closedform.hpp"
#include "latsum/dp.hpp"
#include "latsum/exact/ratfunc.hpp"
#include "latsum/recguess.hpp"

namespace latsum {

using json = nlohmann::ordered_json;

// Canonical text forms. Equal values always serialize identically.

inline json to_json(const BigRat& r) { return r.str(); }

inline json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline json to_json(const AnyScalar& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

inline BigRat bigrat_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected a rational as a JSON string, got " + j.dump());
  return BigRat::parse(j.get<std::string>());
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a polynomial as a JSON array, got " + j.dump());
  std::vector<BigRat> c;
  for (const auto& e : j) c.push_back(bigrat_from_json(e));
  return Poly(std::move(c));
}

inline RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
  return RatFunc::normalize(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

// ---------------------------------------------------------------------------
// Sum tables: one JSON line per (p, quantity).

template <ScalarMode M>
json sum_record(const M& mode, Index p, Quantity q, const scalar_t<M>& value) {
  json rec{{"p", p}, {"quantity", std::string(to_string(q))}, {"mode", std::string(M::name)}};
  if constexpr (std::is_same_v<M, FixedX>) rec["x"] = mode.x0.str();
  rec["value"] = to_json(value);
  return rec;
}

template <ScalarMode M>
void write_table_jsonl(std::ostream& os, const SumTable<M>& t, std::span<const Quantity> which) {
  for (Index p = 1; p <= t.pmax; ++p)
    for (Quantity q : which) os << sum_record(t.mode, p, q, t.value(q, p)).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Conjecture reports.

inline json to_json(const ConjectureReport& r) {
  json out{{"name", std::string(to_string(r.name))},
           {"pmax", r.pmax},
           {"status", r.passed() ? "pass" : "fail"},
           {"checked", r.checked},
           {"passed", r.checked - r.failures}};
  if (r.first_fail)
    out["first_fail"] = json{{"p", r.first_fail->p},
                             {"expected", to_json(r.first_fail->expected)},
                             {"got", to_json(r.first_fail->got)}};
  out["elapsed_ms"] = static_cast<long long>(r.elapsed.count());
  return out;
}

// ---------------------------------------------------------------------------
// Sequences (one canonical rational per line) and recurrence candidates.

inline std::vector<BigRat> read_sequence(std::istream& is) {
  std::vector<BigRat> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    try {
      out.push_back(BigRat::parse(std::string_view(line).substr(b, e - b + 1)));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

inline void write_sequence(std::ostream& os, std::span<const BigRat> seq) {
  for (const auto& v : seq) os << v.str() << '\n';
}

inline json to_json(const RecurrenceCandidate& c) {
  json coeffs = json::array();
  for (const auto& p : c.coeffs) coeffs.push_back(to_json(p));
  json out{{"order", c.order()}};
  const Degree d = c.degree();
  out["degree"] = d ? json(*d) : json(nullptr);
  out["variable"] = "n";
  out["coeffs"] = std::move(coeffs);
  out["window"] = json{{"first", c.window_first}, {"last", c.window_last}};
  return out;
}

inline RecurrenceCandidate candidate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("candidate JSON needs a \"coeffs\" array");
  std::vector<Poly> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c));
  if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != coeffs.size())
    throw ParseError("\"order\" does not match the number of coefficients");
  RecurrenceCandidate cand = make_candidate(coeffs);
  if (j.contains("window")) {
    cand.window_first = j.at("window").value("first", Index{1});
    cand.window_last = j.at("window").value("last", Index{0});
  }
  return cand;
}

}  // namespace latsum
