#pragma once

// Running problem files and rendering the results as JSON or text.  The
// JSON value is built first; the text form is derived from it, so both
// carry the same information and are deterministic.

#include "dmdeg/parser.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace dmdeg {

using Json = nlohmann::ordered_json;

struct RunOptions {
  bool show_resolution = false;
  std::optional<TermOrder> order;  // overrides the problem file
};

struct Report {
  Json data;
  std::string text;
  bool ok = true;  // false: an internal check failed
};

namespace detail {

inline Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Json rational_json(const Rational& r) {
  if (r.get_den() == 1) return integer_json(r.get_num());
  return r.get_str();
}

/// [[e1, e2, c], ...] in the same order as LaurentPoly2::to_string.
inline Json poly_json(const LaurentPoly2& p) {
  Json a = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    a.push_back(Json::array({it->first.first, it->first.second, integer_json(it->second)}));
  return a;
}

inline std::string tblock_text(const VarSpec& vs) {
  std::vector<std::string> t;
  for (int i = 0; i < vs.size(); ++i)
    if (vs.is_t(i)) t.push_back(vs.name(i));
  if (static_cast<int>(t.size()) == vs.size()) return "origin";
  if (t.empty()) return "none";
  std::string s;
  for (const auto& x : t) s += (s.empty() ? "" : " ") + x;
  return s;
}

inline Json input_json(const Job& job, const std::optional<TermOrder>& order) {
  Json in;
  in["mode"] = job.mode == Job::Mode::raw ? "ideal" : "gkz";
  in["vars"] = job.vars.names();
  in["tblock"] = tblock_text(job.vars);
  if (job.mode == Job::Mode::raw) {
    in["rank"] = job.rank;
    Json sf = Json::array(), sv = Json::array();
    for (const auto& s : job.shifts) sf.push_back(s.f), sv.push_back(s.v);
    in["shifts_F"] = sf;
    in["shifts_V"] = sv;
    Json g = Json::array();
    for (const auto& gen : job.gens) {
      Json comps = Json::array();
      for (const auto& c : gen) comps.push_back(render(c, job.vars));
      g.push_back(job.rank == 1 ? comps[0] : comps);
    }
    in["gens"] = g;
  } else {
    Json a = Json::array();
    for (const auto& row : job.A) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(integer_json(v));
      a.push_back(r);
    }
    in["matrix"] = a;
    Json bl = Json::array();
    for (const auto& b : job.betas) {
      Json r = Json::array();
      for (const auto& v : b) r.push_back(rational_json(v));
      bl.push_back(r);
    }
    if (job.beta_is_list)
      in["beta_list"] = bl;
    else if (!bl.empty())
      in["beta"] = bl[0];
  }
  in["order"] = (order ? *order : default_tiebreak(job.vars)).to_string(job.vars);
  return in;
}

inline Json resolution_json(const BifilteredResolution& r, bool with_maps) {
  Json ranks = Json::array(), sf = Json::array(), sv = Json::array();
  for (const auto& l : r.levels) {
    ranks.push_back(l.rank);
    Json f = Json::array(), v = Json::array();
    for (const auto& s : l.shifts) f.push_back(s.f), v.push_back(s.v);
    sf.push_back(f);
    sv.push_back(v);
  }
  Json out;
  out["ranks"] = ranks;
  out["shifts_F"] = sf;
  out["shifts_V"] = sv;
  if (with_maps) {
    Json maps = Json::array();
    for (std::size_t i = 1; i < r.levels.size(); ++i) {
      Json cols = Json::array();
      for (const auto& col : r.levels[i].differential) {
        Json entries = Json::array();
        for (int c = 0; c < r.levels[i - 1].rank; ++c) entries.push_back(render(col.component(c), r.vars));
        cols.push_back(entries);
      }
      maps.push_back(cols);
    }
    out["differentials"] = maps;
  }
  return out;
}

inline void analysis_into(Json& j, const Analysis& a, bool with_maps) {
  j["codim"] = a.codim.codim ? Json(*a.codim.codim) : Json(nullptr);
  j["holonomic"] = a.codim.holonomic;
  j["kpoly"] = poly_json(a.kpoly);
  if (a.multidegree) {
    j["multidegree"] = poly_json(a.multidegree->poly);
    Json b = Json::array();
    for (const auto& v : a.multidegree->b) b.push_back(integer_json(v));
    j["b"] = b;
    j["lower_terms_vanish"] = a.multidegree->lower_terms_vanish;
  } else {
    j["multidegree"] = nullptr;
    j["b"] = Json::array();
    j["lower_terms_vanish"] = true;
  }
  if (a.resolution) j["resolution"] = resolution_json(*a.resolution, with_maps);
  if (!a.verification.ok) j["verification_failures"] = a.verification.failures;
}

inline std::string poly_text(const Json& p) {
  LaurentPoly2 q;
  for (const auto& t : p) {
    Integer c = t[2].is_string() ? Integer(t[2].get<std::string>()) : Integer(t[2].get<long>());
    q.add(t[0].get<int>(), t[1].get<int>(), c);
  }
  return q.to_string();
}

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void input_text(std::ostream& os, const Json& in) {
  os << "input: " << (in["mode"] == "gkz" ? "A-hypergeometric system" : "module D^r/N") << " in";
  for (const auto& v : in["vars"]) os << ' ' << v.get<std::string>();
  os << "; V along " << in["tblock"].get<std::string>() << '\n';
  if (in.contains("matrix")) {
    os << "A:\n";
    for (const auto& row : in["matrix"]) {
      os << " ";
      for (const auto& v : row) os << ' ' << std::setw(3) << scalar_text(v);
      os << '\n';
    }
  }
  if (in.contains("beta")) {
    os << "beta:";
    for (const auto& v : in["beta"]) os << ' ' << scalar_text(v);
    os << '\n';
  }
  if (in.contains("gens")) {
    os << "shifts (F,V):";
    for (std::size_t c = 0; c < in["shifts_F"].size(); ++c)
      os << " (" << in["shifts_F"][c].dump() << "," << in["shifts_V"][c].dump() << ")";
    os << '\n';
  }
  if (in.contains("order")) os << "tie-break order: " << in["order"].get<std::string>() << '\n';
}

inline void analysis_text(std::ostream& os, const Json& j) {
  if (j["codim"].is_null()) {
    os << "codim: none (zero module)\n";
  } else {
    os << "codim: " << j["codim"].dump() << (j["holonomic"].get<bool>() ? " (holonomic)" : "") << '\n';
  }
  os << "K-polynomial: " << poly_text(j["kpoly"]) << '\n';
  if (!j["multidegree"].is_null()) {
    os << "multidegree: " << poly_text(j["multidegree"]) << '\n';
    os << "b:";
    for (const auto& v : j["b"]) os << ' ' << scalar_text(v);
    os << '\n';
    os << "lower terms vanish: " << (j["lower_terms_vanish"].get<bool>() ? "yes" : "no") << '\n';
  }
  if (j.contains("resolution")) {
    const auto& r = j["resolution"];
    os << "resolution:\n";
    for (std::size_t i = 0; i < r["ranks"].size(); ++i) {
      os << "  level " << i << ": rank " << r["ranks"][i].dump() << ", shifts";
      for (std::size_t k = 0; k < r["shifts_F"][i].size(); ++k)
        os << " (" << r["shifts_F"][i][k].dump() << "," << r["shifts_V"][i][k].dump() << ")";
      os << '\n';
    }
    if (r.contains("differentials")) {
      for (std::size_t i = 0; i < r["differentials"].size(); ++i) {
        os << "  d" << i + 1 << ":\n";
        for (std::size_t c = 0; c < r["differentials"][i].size(); ++c) {
          os << "    column " << c << ": [";
          bool first = true;
          for (const auto& e : r["differentials"][i][c]) {
            os << (first ? "" : ", ") << e.get<std::string>();
            first = false;
          }
          os << "]\n";
        }
      }
    }
  }
  if (j.contains("verification_failures"))
    for (const auto& f : j["verification_failures"]) os << "VERIFICATION FAILURE: " << f.get<std::string>() << '\n';
}

inline AnalysisOptions analysis_options(const Job& job, const RunOptions& opt, bool resolution) {
  AnalysisOptions ao;
  ao.tiebreak = opt.order ? opt.order : job.order;
  ao.allow_negative_shifts = job.allow_negative_shifts;
  ao.build_resolution = resolution;
  ao.check_exactness = resolution;
  return ao;
}

inline GkzInstance instance_of(const Job& job, bool need_beta) {
  if (job.mode != Job::Mode::gkz) throw ParseError(1, 1, "this command needs a matrix: problem");
  return GkzInstance::make(job.A, need_beta ? job.beta() : std::vector<Rational>{});
}

}  // namespace detail

/// multidegree (and resolve, with `resolution`) on any problem.
inline Report run_multidegree(const Job& job, const RunOptions& opt, bool resolution = false) {
  const bool build = resolution || opt.show_resolution;
  auto ao = detail::analysis_options(job, opt, build);
  Analysis a = job.mode == Job::Mode::raw ? analyze(job.gens, job.shifts, job.vars, ao)
                                          : analyze_gkz(detail::instance_of(job, true), job.vars, ao);
  Report r;
  r.data["input"] = detail::input_json(job, ao.tiebreak);
  detail::analysis_into(r.data, a, opt.show_resolution);
  r.ok = a.ok();
  std::ostringstream os;
  detail::input_text(os, r.data["input"]);
  detail::analysis_text(os, r.data);
  r.text = os.str();
  return r;
}

inline Report run_resolve(const Job& job, const RunOptions& opt) { return run_multidegree(job, opt, true); }

/// multidegree plus volume, the generic prediction and the Cohen-Macaulay test.
inline Report run_gkz(const Job& job, const RunOptions& opt) {
  GkzInstance g = detail::instance_of(job, true);
  auto ao = detail::analysis_options(job, opt, opt.show_resolution);
  Analysis a = analyze_gkz(g, job.vars, ao);
  Report r;
  r.data["input"] = detail::input_json(job, ao.tiebreak);
  detail::analysis_into(r.data, a, opt.show_resolution);
  Integer vol = normalized_volume(g);
  LaurentPoly2 formula = generic_formula(vol, g.d(), g.n());
  r.data["volume"] = detail::integer_json(vol);
  r.data["prediction_eq2"] = detail::poly_json(formula);
  r.data["cohen_macaulay"] = is_cohen_macaulay_toric(g);
  r.ok = a.ok();
  std::ostringstream os;
  detail::input_text(os, r.data["input"]);
  detail::analysis_text(os, r.data);
  os << "volume: " << vol.get_str() << '\n';
  os << "generic prediction: " << formula.to_string();
  if (a.multidegree) os << (a.multidegree->poly == formula ? " (matches)" : " (differs)");
  os << '\n';
  os << "Cohen-Macaulay: " << (r.data["cohen_macaulay"].get<bool>() ? "yes" : "no") << '\n';
  r.text = os.str();
  return r;
}

inline Report run_toric(const Job& job, const RunOptions&) {
  GkzInstance g = detail::instance_of(job, false);
  VarSpec vs = job.vars;
  GroebnerBasis gb = toric_gb(g, vs);
  CohenMacaulayReport cm = cohen_macaulay_report(g);
  Report r;
  r.data["input"] = detail::input_json(job, std::nullopt);
  r.data["input"].erase("order");
  Json gens = Json::array();
  for (const auto& f : gb.elems) gens.push_back(render(f.component(0), vs));
  r.data["toric_ideal"] = gens;
  r.data["cohen_macaulay"] = cm.cohen_macaulay;
  r.data["projective_dimension"] = cm.projective_dimension;
  r.data["dimension"] = cm.dimension;
  r.data["betti"] = cm.betti;
  std::ostringstream os;
  detail::input_text(os, r.data["input"]);
  os << "toric ideal (reduced grevlex basis):\n";
  for (const auto& s : gens) os << "  " << s.get<std::string>() << '\n';
  os << "homogenized ring: dimension " << cm.dimension << ", projective dimension " << cm.projective_dimension
     << ", Betti numbers";
  for (int b : cm.betti) os << ' ' << b;
  os << '\n';
  os << "Cohen-Macaulay: " << (cm.cohen_macaulay ? "yes" : "no") << '\n';
  r.text = os.str();
  return r;
}

inline Report run_volume(const Job& job, const RunOptions&) {
  GkzInstance g = detail::instance_of(job, false);
  Report r;
  r.data["input"] = detail::input_json(job, std::nullopt);
  r.data["input"].erase("order");
  std::optional<Integer> hull, deg;
  if (g.d() <= 3) hull = normalized_volume_hull(g.A);
  if (detail::homogeneous_instance(g)) deg = normalized_volume_degree(g);
  Integer vol = normalized_volume(g);
  r.data["volume"] = detail::integer_json(vol);
  if (hull) r.data["volume_hull"] = detail::integer_json(*hull);
  if (deg) r.data["volume_degree"] = detail::integer_json(*deg);
  std::ostringstream os;
  os << "volume: " << vol.get_str() << '\n';
  if (hull) os << "  convex hull: " << hull->get_str() << '\n';
  if (deg) os << "  toric degree: " << deg->get_str() << '\n';
  if (hull && deg && *hull != *deg) {
    r.ok = false;
    os << "VERIFICATION FAILURE: hull and degree computations disagree\n";
  }
  r.text = os.str();
  return r;
}

/// Sweep over the beta list; JSON is an array of rows.
inline Report run_sweep(const Job& job, const RunOptions& opt) {
  if (job.mode != Job::Mode::gkz) throw ParseError(1, 1, "sweep needs a matrix: problem");
  if (job.betas.empty()) throw ParseError(job.matrix_line, 1, "sweep needs a beta_list: block (or a beta line)");
  GkzInstance::make(job.A);  // validates A before fanning out
  auto ao = detail::analysis_options(job, opt, false);
  SweepResult s = sweep_beta(job.A, job.betas, job.vars, ao);
  Report r;
  r.data = Json::array();
  for (const auto& row : s.rows) {
    Json j;
    Json b = Json::array();
    for (const auto& v : row.beta) b.push_back(detail::rational_json(v));
    j["beta"] = b;
    j["ok"] = row.ok;
    if (!row.error.empty()) j["error"] = row.error;
    j["codim"] = row.codim ? Json(*row.codim) : Json(nullptr);
    j["holonomic"] = row.holonomic;
    if (row.multidegree) {
      j["multidegree"] = detail::poly_json(row.multidegree->poly);
      Json bv = Json::array();
      for (const auto& v : row.multidegree->b) bv.push_back(detail::integer_json(v));
      j["b"] = bv;
    } else {
      j["multidegree"] = nullptr;
      j["b"] = Json::array();
    }
    j["positive"] = row.positive;
    j["exceptional"] = row.exceptional;
    if (row.exceptional) j["dominates_generic"] = row.dominates;
    if (!row.ok) r.ok = false;
    r.data.push_back(j);
  }
  std::ostringstream os;
  std::vector<std::string> beta_s, md_s;
  std::size_t wb = 4, wm = 11;
  for (const auto& row : s.rows) {
    std::string b = "(";
    for (std::size_t i = 0; i < row.beta.size(); ++i) b += (i ? "," : "") + row.beta[i].get_str();
    b += ")";
    beta_s.push_back(b);
    md_s.push_back(row.multidegree ? row.multidegree->to_string() : (row.ok ? "-" : "error: " + row.error));
    wb = std::max(wb, b.size());
    wm = std::max(wm, md_s.back().size());
  }
  os << std::left << std::setw(static_cast<int>(wb)) << "beta" << "  " << std::setw(5) << "codim" << "  "
     << std::setw(static_cast<int>(wm)) << "multidegree" << "  flags\n" << std::right;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto& row = s.rows[i];
    std::string flags;
    if (row.exceptional) {
      flags += "exceptional";
      bool all = std::all_of(row.dominates.begin(), row.dominates.end(), [](bool v) { return v; });
      flags += all ? " dominates" : " not-dominating";
    }
    if (row.multidegree && !row.positive) flags += flags.empty() ? "negative-b" : " negative-b";
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(wb)) << beta_s[i] << "  " << std::setw(5)
         << (row.codim ? std::to_string(*row.codim) : "-") << "  " << std::setw(static_cast<int>(wm)) << md_s[i] << "  "
         << flags;
    std::string l = line.str();
    l.erase(l.find_last_not_of(' ') + 1);
    os << l << '\n';
  }
  if (s.modal)
    os << "generic (most frequent, " << s.modal_count << " of " << s.rows.size() << "): " << s.modal->to_string() << '\n';
  if (s.formula && s.modal_matches_formula)
    os << "generic prediction: " << s.formula->to_string() << (*s.modal_matches_formula ? " (matches)" : " (differs)") << '\n';
  int exc = 0;
  for (const auto& row : s.rows) exc += row.exceptional;
  os << "exceptional points: " << exc << "; all dominate generic coordinatewise: "
     << (s.all_exceptional_dominate ? "yes" : "no") << '\n';
  r.text = os.str();
  return r;
}

}  // namespace dmdeg
