#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wellconn/clustering.hpp"
#include "wellconn/graph.hpp"

namespace wellconn::dl {

/// Unit tags understood by convert(). Other tags are carried through
/// unchanged and only compared for equality.
inline constexpr const char* kNats = "nats";
inline constexpr const char* kBits = "bits";

/// One description-length term with its unit.
struct Term {
  double value = 0;
  std::string unit = kNats;
};

/// The four terms of the degree-corrected SBM description length:
/// -log p(A|b,e,k), -log p(k|b,e), -log p(b) and -log p(e).
struct Components {
  Term log_pA;
  Term log_pk;
  Term log_pb;
  Term log_pe;

  static Components uniform(double pA, double pk, double pb, double pe, const std::string& unit = kNats);
  /// The common unit. Throws MismatchError if the terms disagree.
  std::string unit() const;
};

/// Sum of the four terms. Throws MismatchError on mixed units and
/// ContractViolation on negative or non-finite values.
double compose(const Components& c);

/// Re-expresses nats as bits or bits as nats.
Components convert(const Components& c, const std::string& unit);

enum class Side { Untreated, Treated, Tie };
std::string to_string(Side s);

struct DiffReport {
  std::string unit;
  double d_log_pA = 0, d_log_pk = 0, d_log_pb = 0, d_log_pe = 0;  // treated - untreated
  double total = 0;
  Side preference = Side::Tie;              // lower total description length
  Side preference_without_pe = Side::Tie;   // same, ignoring -log p(e)
  bool flipped = false;
};

DiffReport diff(const Components& untreated, const Components& treated);

/// Tally over many (untreated, treated) pairs: among cases where the
/// untreated clustering is preferred, how many switch to the treated one
/// once -log p(e) is dropped.
struct FlipTally {
  std::size_t cases = 0;
  std::size_t untreated_preferred = 0;
  std::size_t flipped = 0;
  double flipped_fraction() const {
    return untreated_preferred ? static_cast<double>(flipped) / static_cast<double>(untreated_preferred) : 0.0;
  }
};

FlipTally tally(std::span<const DiffReport> reports);

/// -log p(e) for an undirected SBM with B blocks and E edges, in nats:
/// log C(B(B+1)/2 + E - 1, E). Zero for B = 1. Throws ContractViolation if B < 1.
double log_p_e(std::uint64_t blocks, std::uint64_t edges);

/// log_p_e with B = number of clusters (singletons included), E = m.
double pe_for_clustering(const Graph& g, const Clustering& c);

nlohmann::json to_json(const Components& c);
/// Accepts {"unit": u, "log_pA": x, ...} with optional per-term
/// {"value": x, "unit": u} objects overriding the document unit.
Components components_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DiffReport& d);

}  // namespace wellconn::dl
