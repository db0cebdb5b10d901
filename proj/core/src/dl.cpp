#include "wellconn/dl.hpp"

#include <math.h>

#include <algorithm>
#include <cmath>

#include "wellconn/error.hpp"

namespace wellconn::dl {

Components Components::uniform(double pA, double pk, double pb, double pe, const std::string& unit) {
  return {{pA, unit}, {pk, unit}, {pb, unit}, {pe, unit}};
}

std::string Components::unit() const {
  for (const Term* t : {&log_pk, &log_pb, &log_pe})
    if (t->unit != log_pA.unit)
      throw MismatchError("description-length terms mix units '" + log_pA.unit + "' and '" + t->unit + "'");
  return log_pA.unit;
}

double compose(const Components& c) {
  c.unit();
  double total = 0;
  for (const Term* t : {&c.log_pA, &c.log_pk, &c.log_pb, &c.log_pe}) {
    if (!std::isfinite(t->value) || t->value < 0)
      throw ContractViolation("description-length terms must be finite and non-negative");
    total += t->value;
  }
  return total;
}

Components convert(const Components& c, const std::string& unit) {
  const std::string from = c.unit();
  if (from == unit) return c;
  double factor = 0;
  if (from == kNats && unit == kBits) factor = 1.0 / std::log(2.0);
  else if (from == kBits && unit == kNats) factor = std::log(2.0);
  else throw MismatchError("cannot convert description length from '" + from + "' to '" + unit + "'");
  return Components::uniform(c.log_pA.value * factor, c.log_pk.value * factor, c.log_pb.value * factor,
                 c.log_pe.value * factor, unit);
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Untreated: return "untreated";
    case Side::Treated: return "treated";
    case Side::Tie: return "tie";
  }
  return "?";
}

namespace {
Side lower(double untreated, double treated) {
  if (untreated < treated) return Side::Untreated;
  if (treated < untreated) return Side::Treated;
  return Side::Tie;
}
}  // namespace

DiffReport diff(const Components& untreated, const Components& treated) {
  const std::string unit = untreated.unit();
  if (treated.unit() != unit)
    throw MismatchError("untreated components are in '" + unit + "', treated in '" + treated.unit() + "'");
  const double before = compose(untreated);
  const double after = compose(treated);

  DiffReport d;
  d.unit = unit;
  d.d_log_pA = treated.log_pA.value - untreated.log_pA.value;
  d.d_log_pk = treated.log_pk.value - untreated.log_pk.value;
  d.d_log_pb = treated.log_pb.value - untreated.log_pb.value;
  d.d_log_pe = treated.log_pe.value - untreated.log_pe.value;
  d.total = after - before;
  d.preference = lower(before, after);
  d.preference_without_pe = lower(before - untreated.log_pe.value, after - treated.log_pe.value);
  d.flipped = d.preference != d.preference_without_pe;
  return d;
}

FlipTally tally(std::span<const DiffReport> reports) {
  FlipTally t;
  for (const auto& r : reports) {
    ++t.cases;
    if (r.preference != Side::Untreated) continue;
    ++t.untreated_preferred;
    if (r.preference_without_pe == Side::Treated) ++t.flipped;
  }
  return t;
}

double log_p_e(std::uint64_t blocks, std::uint64_t edges) {
  if (blocks < 1) throw ContractViolation("log_p_e: need at least one block");
  // log C(K + E - 1, E) with K = B(B+1)/2.
  const long double k = static_cast<long double>(blocks) * (static_cast<long double>(blocks) + 1) / 2;
  if (edges <= 4096) {
    long double s = 0;
    for (std::uint64_t i = 1; i <= edges; ++i) s += std::log1p((k - 1) / static_cast<long double>(i));
    return static_cast<double>(s);
  }
  int sign = 0;
  const long double e = static_cast<long double>(edges);
  return static_cast<double>(lgammal_r(k + e, &sign) - lgammal_r(e + 1, &sign) - lgammal_r(k, &sign));
}

double pe_for_clustering(const Graph& g, const Clustering& c) {
  if (g.n() != c.n()) throw MismatchError("pe_for_clustering: clustering does not cover the graph");
  return log_p_e(std::max<std::size_t>(c.size(), 1), g.m());
}

using nlohmann::json;

json to_json(const Components& c) {
  const auto unit = c.unit();
  return {{"unit", unit},
          {"log_pA", c.log_pA.value},
          {"log_pk", c.log_pk.value},
          {"log_pb", c.log_pb.value},
          {"log_pe", c.log_pe.value}};
}

Components components_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("component document must be a JSON object");
  const std::string unit = j.value("unit", std::string(kNats));
  auto term = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("component document lacks '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_number()) return Term{v.get<double>(), unit};
    if (v.is_object() && v.contains("value") && v.at("value").is_number())
      return Term{v.at("value").get<double>(), v.value("unit", unit)};
    throw ParseError(std::string("component '") + key + "' must be a number or {value, unit}");
  };
  return {term("log_pA"), term("log_pk"), term("log_pb"), term("log_pe")};
}

json to_json(const DiffReport& d) {
  return {{"unit", d.unit},
          {"difference",
           {{"log_pA", d.d_log_pA}, {"log_pk", d.d_log_pk}, {"log_pb", d.d_log_pb}, {"log_pe", d.d_log_pe}}},
          {"total_difference", d.total},
          {"preference", to_string(d.preference)},
          {"preference_without_pe", to_string(d.preference_without_pe)},
          {"flipped", d.flipped}};
}

}  // namespace wellconn::dl
