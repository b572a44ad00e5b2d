#include "cli/report.hpp"

#include <fstream>
#include <ostream>

namespace schurbound::cli {

ordered_json ReportDocument::to_json() const {
  ordered_json doc = ordered_json::object();
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["exit_code"] = exit_code;
  doc["timing_ms"] = timing_ms;
  return doc;
}

void emit_report(const ReportDocument& doc, std::ostream& out) {
  out << doc.to_json().dump(2) << "\n";
}

void emit_report(const ReportDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path.string());
  emit_report(doc, out);
  if (!out) throw std::runtime_error("error while writing report to " + path.string());
}

ordered_json to_json(const MuResult& r) {
  return {{"m", r.m}, {"value", r.value}, {"argmin_subset", r.argmin_subset}};
}

ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["r_B"] = r.r_b;
  j["mu_order"] = r.mu.m;
  j["mu"] = r.mu.value;
  j["mu_argmin_subset"] = r.mu.argmin_subset;
  j["kappa_eff"] = r.kappa_eff;
  j["min_diag"] = r.min_diag;
  j["lambda_min_A"] = r.lambda_min_a;
  j["classical_bound"] = r.classical_bound;
  j["quantitative_bound"] = r.quantitative_bound;
  j["actual_lambda_min"] = r.actual_lambda_min;
  j["loewner_verified"] = r.loewner_verified;
  j["margin"] = r.margin;
  return j;
}

ordered_json to_json(const NonsingularityVerdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  j["n"] = v.n;
  j["k_A"] = v.kruskal_rank_a;
  j["r_B"] = v.rank_b;
  j["min_diag_B"] = v.min_diag_b;
  j["explanation"] = v.explanation;
  return j;
}

ordered_json to_json(const CertificateVerdict& v) {
  ordered_json j;
  j["n"] = v.n;
  j["r"] = v.r;
  j["mu"] = v.mu;
  j["lambda_min_C"] = v.lambda_min_c;
  j["hypothesis_threshold"] = v.hypothesis_threshold;
  j["lambda_min_product"] = v.lambda_min_product;
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["conclusion_holds"] = v.conclusion_holds;
  j["consistent"] = v.consistent();
  return j;
}

ordered_json to_json(const ProjectionResiduals& r) {
  ordered_json j;
  j["norm_identity"] = r.norm_identity;
  j["q_idempotency"] = r.q_idempotency;
  j["q_annihilates_x"] = r.q_annihilates_x;
  j["q_trace"] = r.q_trace;
  j["r_idempotency"] = r.r_idempotency;
  j["r_trace"] = r.r_trace;
  j["p1_idempotency"] = r.p1_idempotency;
  j["p1_trace"] = r.p1_trace;
  return j;
}

ordered_json to_json(const DoaBoundReport& r) {
  ordered_json j;
  j["r_sigma_s"] = r.r_sigma_s;
  j["m"] = r.m;
  j["tilde_sigma_sq"] = r.tilde_sigma_sq;
  j["kappa_eff"] = r.kappa_eff;
  j["min_diag"] = r.min_diag;
  j["bound"] = r.bound;
  j["lambda_min_smoothed"] = r.lambda_min_smoothed;
  j["bound_holds"] = r.bound_holds;
  j["predicted_positive"] = r.predicted_positive;
  return j;
}

ordered_json to_json(const RankIdentity& r) {
  return {{"expected", r.expected}, {"rank", r.rank}, {"kruskal_rank", r.kruskal_rank},
          {"holds", r.holds}};
}

ordered_json to_json(const CpBoundReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["rank_G"] = r.rank_g;
  j["k_G"] = r.kruskal_rank_g;
  j["condition_met"] = r.condition_met;
  j["predicate_G_BtB"] = r.predicate_g_bb;
  j["predicate_BtB_G"] = r.predicate_bb_g;
  j["mu_order"] = r.mu_g.m;
  j["mu_G"] = r.mu_g.value;
  j["kappa_eff_BtB"] = r.kappa_eff_bb;
  j["sigma_d1_sq"] = r.sigma_d1_sq;
  j["hadamard_floor"] = r.hadamard_floor;
  j["m1_floor"] = r.m1_floor;
  j["lambda_min_core"] = r.lambda_min_core;
  j["lambda_plus_min_M1"] = r.lambda_plus_min_m1;
  j["core_floor_holds"] = r.core_floor_holds;
  j["m1_floor_holds"] = r.m1_floor_holds;
  j["m1_form_discrepancy"] = r.m1_discrepancy;
  return j;
}

}  // namespace schurbound::cli
