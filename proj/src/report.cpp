#include "spencerlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace spencerlab {

namespace {

Json dims_json(const std::map<int, std::size_t>& dims) {
  Json out = Json::object();
  for (const auto& [w, d] : dims)
    if (d != 0) out[std::to_string(w)] = d;
  return out;
}

Json monomials_json(const std::vector<Monomial>& basis, const RingPtr& ring) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(ring->monomial_to_string(m));
  return out;
}

Json polynomials_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

Json to_json(const HomologyTable& table) {
  Json out = Json::object();
  for (const auto& [index, row] : table.by_index()) out[std::to_string(index)] = dims_json(row);
  return out;
}

Json to_json(const AcyclicityCertificate& cert) {
  Json pieces = Json::array();
  for (const auto& p : cert.pieces) {
    if (p.dim == 0) continue;
    pieces.push_back({{"form_degree", p.form_degree},
                      {"weight", p.weight},
                      {"dim", p.dim},
                      {"lie_bijective", p.lie_bijective},
                      {"homotopy_identity", p.homotopy_identity},
                      {"homology", p.homology}});
  }
  Json out = {{"complex", cert.complex_name},
              {"derivation", cert.derivation},
              {"degree_bound", cert.degree_bound},
              {"form_degrees", {cert.min_form_degree, cert.max_form_degree}},
              {"cartan", cert.cartan},
              {"valid", cert.valid},
              {"pieces_checked", cert.pieces.size()},
              {"pieces", pieces}};
  if (cert.refused) out["refused"] = {cert.refused->first, cert.refused->second};
  return out;
}

Json to_json(const CartanReport& report) {
  Json violations = Json::array();
  for (const auto& [i, d] : report.violations) violations.push_back({i, d});
  return {{"holds", report.holds}, {"pieces_checked", report.pieces_checked}, {"violations", violations}};
}

Json to_json(const LimitReport& report) {
  Json entries = Json::object();
  Json unstable = Json::array();
  for (const auto& [key, e] : report.entries) {
    if (!e.stabilized) unstable.push_back({key.first, key.second});
    const bool seen = std::any_of(e.stage_dims.begin(), e.stage_dims.end(), [](std::size_t v) { return v != 0; });
    if (!seen && e.stabilized) continue;
    Json entry = {{"stage_dims", e.stage_dims}, {"stabilized", e.stabilized}};
    if (e.stabilized) {
      entry["lim"] = e.lim;
      entry["lim1"] = e.lim1;
      entry["stable_from"] = e.stable_from;
    }
    entries[std::to_string(key.first)][std::to_string(key.second)] = entry;
  }
  return {{"stages", report.stages}, {"entries", entries}, {"not_stabilized", unstable},
          {"all_stabilized", report.all_stabilized()}};
}

Json to_json(const KashiwaraQuotient& q) {
  return {{"p", q.p},
          {"dims", dims_json(q.dims)},
          {"total_dimension", q.total_dimension},
          {"nilpotency_index", q.nilpotency_index},
          {"supported_on_subvariety", q.supported_on_subvariety}};
}

Json to_json(const PairingReport& report) {
  Json ranks = Json::object();
  for (const auto& [w, r] : report.ranks) ranks[std::to_string(w)] = r;
  return {{"n", report.n}, {"i", report.i}, {"bijective", report.bijective}, {"ranks", ranks},
          {"failures", report.failures}};
}

Json to_json(const KoszulH0Report& report) {
  Json stages = Json::object();
  for (const auto& row : report.rows) {
    auto& s = stages[std::to_string(row.stage)][std::to_string(row.weight)];
    s = {{"h0", row.h0}, {"expected", row.expected}, {"higher", row.higher}};
  }
  return {{"matches", report.matches}, {"higher_vanishes", report.higher_vanishes}, {"stages", stages}};
}

Json to_json(const SmoothnessReport& report) {
  Json out = {{"smooth", report.smooth}, {"codimension", report.codimension}};
  if (!report.smooth) out["singular_locus"] = polynomials_json(report.singular_locus);
  return out;
}

Json to_json(const MilnorTjurina& mt, const RingPtr& ring) {
  Json out = {{"weighted_homogeneous", mt.weighted_homogeneous}};
  out["mu"] = mt.mu ? Json(*mt.mu) : Json("infinite");
  out["tau"] = mt.tau ? Json(*mt.tau) : Json("infinite");
  out["basis"] = monomials_json(mt.mu_basis, ring);
  out["tau_basis"] = monomials_json(mt.tau_basis, ring);
  return out;
}

Json to_json(const SpencerH0& h0) {
  Json out = {{"alpha_generators", polynomials_json(h0.alpha_generators)},
              {"alpha", "ideal generated by values of weight <= D derivations on the coordinates"},
              {"quotient", dims_json(h0.quotient)}};
  if (h0.jacobian) {
    out["jacobian_quotient"] = dims_json(*h0.jacobian);
    out["matches_jacobian"] = *h0.matches_jacobian;
  }
  return out;
}

std::string render_table(const HomologyTable& table, const std::string& title) {
  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  const auto rows = table.by_index();
  if (rows.empty()) {
    out << "  (all zero up to weight " << table.degree_bound() << ")\n";
    return out.str();
  }
  std::set<int> weights;
  for (const auto& [i, row] : rows)
    for (const auto& [w, d] : row) weights.insert(w);
  out << std::setw(8) << "index";
  for (int w : weights) out << std::setw(5) << w;
  out << "\n";
  for (const auto& [i, row] : rows) {
    out << std::setw(8) << i;
    for (int w : weights) {
      auto it = row.find(w);
      out << std::setw(5) << (it == row.end() ? std::string(".") : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace spencerlab
