#include "report.hpp"

#include <cstdio>

namespace singequiv::report {

Json to_json(const Bounded& b) {
  Json j;
  j["finite"] = b.finite();
  if (b.finite())
    j["value"] = *b.value;
  else
    j["at_least"] = b.bound + 1;
  if (b.size_limited) j["size_limited"] = true;
  return j;
}

Json to_json(const Multiplicity& m) {
  if (m.fits_slong_p()) return Json(m.get_si());
  return Json(m.get_str());
}

Json to_json(const std::vector<Multiplicity>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(to_json(m));
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["failures"] = r.failures;
  return j;
}

Json to_json(const HomologicalReport& h) {
  Json j;
  j["verdict"] = to_string(h.verdict);
  j["bound"] = h.bound;
  j["idempotent"] = h.idempotent;
  j["tor_ideal_quotient"] = to_json(h.tor);
  j["pd_quotient_left"] = to_json(h.pd_quotient_left);
  j["pd_ideal_right"] = to_json(h.pd_ideal_right);
  j["reason"] = h.reason;
  Json o;
  o["verdict"] = to_string(h.direct);
  o["tensor_dim"] = h.tensor_dim;
  o["multiplication_rank"] = h.multiplication_rank;
  o["tor_quotient_quotient"] = to_json(h.tor_quotient);
  o["agrees"] = h.oracles_agree;
  j["direct_oracle"] = o;
  return j;
}

Json to_json(const HereditaryCertificate& c, const Algebra& a) {
  Json j;
  j["hereditary"] = c.hereditary();
  j["idempotent"] = c.idempotent;
  j["ideal_dim"] = c.ideal_dim;
  j["cover_dim"] = c.cover_dim;
  j["kernel_dim"] = c.kernel_dim;
  Json cover = Json::array();
  for (const auto& p : c.cover) cover.push_back({a.vertex_names()[p.left], a.vertex_names()[p.right]});
  j["cover"] = cover;
  return j;
}

Json to_json(const TheoremReport& t, const Algebra& a) {
  Json j;
  j["conclusion"] = to_string(t.conclusion);
  j["homological"] = to_json(t.homological);
  j["hereditary"] = to_json(t.hereditary, a);
  j["bimodule_pd"] = to_json(t.bimodule_pd);
  return j;
}

Json to_json(const PeelCertificate& c) {
  Json j;
  j["vertex"] = c.vertex_name;
  j["certified"] = c.certified();
  j["dims"] = {{"gamma", c.dim_gamma}, {"A", c.dim_a}, {"M", c.dim_m}, {"N", c.dim_n}, {"quotient", c.dim_quotient}};
  Json phi = Json::array();
  for (std::size_t r = 0; r < c.phi.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t s = 0; s < c.phi.cols(); ++s) row.push_back(c.phi.field().format(c.phi(r, s)));
    phi.push_back(row);
  }
  j["phi"] = phi;
  j["extension"] = to_json(c.extension);
  j["multiplication"] = {{"dim_gamma_e", c.dim_gamma_e},
                         {"dim_e_gamma", c.dim_e_gamma},
                         {"rank", c.multiplication_rank},
                         {"dim_ideal", c.dim_ideal},
                         {"bijective", c.multiplication_bijective()}};
  j["hereditary"] = c.hereditary.hereditary();
  j["quotient_identification"] = to_json(c.quotient_identification);
  return j;
}

Json to_json(const DsgHomReport& d) {
  Json j;
  j["shift"] = d.shift;
  j["status"] = to_string(d.status);
  j["value"] = d.value ? Json(*d.value) : Json(nullptr);
  j["first_n"] = d.first;
  j["dims"] = d.dims;
  j["transition_ranks"] = d.transition_ranks;
  j["gorenstein_dim"] = d.gorenstein_dim ? Json(*d.gorenstein_dim) : Json(nullptr);
  j["stable_from"] = d.value ? Json(d.stable_from) : Json(nullptr);
  j["bound"] = d.bound;
  j["window"] = d.window;
  return j;
}

namespace {

Json gorenstein_json(const GorensteinReport& g) {
  return {{"verdict", g.str()}, {"injdim_left", to_json(g.injdim_left)}, {"injdim_right", to_json(g.injdim_right)}};
}

}  // namespace

Json to_json(const ShadowReport& s) {
  Json j;
  j["label"] = s.certified ? "CERTIFIED" : "UNCERTIFIED";
  j["quotient"] = algebra_summary(*s.quotient);
  j["gorenstein_quotient"] = gorenstein_json(s.quotient_gorenstein);
  j["gorenstein_algebra"] = gorenstein_json(s.algebra_gorenstein);
  Json cells = Json::array();
  for (const auto& c : s.cells) {
    Json cj;
    cj["source"] = c.source;
    cj["target"] = c.target;
    cj["shift"] = c.shift;
    cj["result"] = c.match() ? "MATCH" : "MISMATCH";
    cj["quotient_side"] = to_json(c.quotient_side);
    cj["algebra_side"] = to_json(c.algebra_side);
    cells.push_back(cj);
  }
  j["cells"] = cells;
  j["matches"] = s.matches();
  j["total"] = s.cells.size();
  return j;
}

Json to_json(const ExampleReport& e) {
  Json j;
  j["fixture"] = e.fixture;
  if (e.fixture == "e33") j["r"] = e.r;
  j["all_passed"] = e.all_passed();
  Json claims = Json::array();
  for (const auto& c : e.claims) {
    Json cj;
    cj["id"] = c.id;
    cj["statement"] = c.statement;
    cj["kind"] = to_string(c.kind);
    cj["result"] = c.passed ? "PASS" : "FAIL";
    cj["observed"] = c.observed;
    if (!c.note.empty()) cj["note"] = c.note;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  return j;
}

Json to_json(const HarnessReport& h) {
  Json j;
  j["seed"] = h.options.seed;
  j["count"] = h.options.count;
  j["bound"] = h.options.bound;
  j["counts"] = {{"vertex_ideals", h.ideals},
                 {"ideals_both_conclusive", h.ideals_conclusive},
                 {"ideals_homological", h.ideals_yes},
                 {"resolutions_checked", h.resolutions},
                 {"tor_checks", h.tor_checks},
                 {"extension_data", h.extensions},
                 {"extension_data_nonzero_phi", h.extensions_nontrivial},
                 {"round_trips", h.round_trips},
                 {"certified_peels", h.certified_peels},
                 {"non_injective_controls", h.non_injective}};
  Json v = Json::array();
  for (const auto& x : h.violations)
    v.push_back({{"instance", x.instance}, {"replay_seed", x.replay_seed}, {"check", x.check}, {"detail", x.detail}});
  j["violations"] = v;
  return j;
}

Json algebra_summary(const Algebra& a) {
  Json j;
  j["field"] = a.field().name();
  j["dim"] = a.dim();
  j["vertices"] = a.vertex_names();
  j["basis"] = a.labels();
  j["radical_dim"] = a.radical().dim();
  j["radical_square_dim"] = a.radical_square().dim();
  return j;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace singequiv::report
