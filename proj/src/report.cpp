#include "tfbn/report.hpp"

#include <iomanip>
#include <sstream>

#include "tfbn/checked.hpp"
#include "tfbn/error.hpp"
#include "tfbn/euler.hpp"

namespace tfbn::report {

Json to_json(const DivisorClass& d) { return Json(d.coeffs); }

Json to_json(const Window& w) {
  Json out = Json::array();
  for (const auto& [lo, hi] : w.ranges) out.push_back(Json::array({lo, hi}));
  return out;
}

Json to_json(const TFComponent& c) {
  Json j;
  j["kind"] = c.kind == TFKind::Prioritary ? "prioritary" : "nonprioritary";
  j["dimension"] = c.dimension;
  if (c.embedding_codim) j["embedding_codim"] = *c.embedding_codim;
  j["embedding_codim_available"] = c.embedding_codim.has_value();
  j["generic_locally_free"] = c.generic_locally_free;
  j["singular_locus_length"] = c.singular_locus_length;
  if (c.kind == TFKind::Nonprioritary) {
    j["D"] = to_json(*c.D);
    j["n1"] = c.n1;
    j["n2"] = *c.n2;
  }
  return j;
}

Json to_json(const BNComponent& c) {
  Json j;
  j["kind"] = c.kind == BNKind::CurveType ? "curve" : "prioritary";
  j["codim"] = c.codim;
  j["dim"] = c.dim;
  j["description"] = c.description;
  if (c.kind == BNKind::CurveType) {
    j["D"] = to_json(*c.D);
    j["n"] = c.n;
    j["gamma_degree"] = c.gamma_degree;
  }
  return j;
}

Json to_json(const ClassPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms)
    if (coeff != 0) terms.push_back(Json{{"coeff", coeff}, {"exponents", exps}});
  return terms;
}

Json to_json(const AdmissibleRegion& r) {
  return Json{{"fiber", to_json(r.fiber)},
              {"fiber_form", to_json(r.fiber_form)},
              {"fiber_bound_x2", r.fiber_bound_x2},
              {"points_total", to_json(r.points_total)},
              {"chi_bound", to_json(r.chi_bound)},
              {"inequalities", r.inequalities}};
}

Json tf_report(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2, const Window& window,
               bool default_window, bool check) {
  check_class(s, c1);
  const ChernData chern{2, c1, c2};
  Json j;
  j["command"] = "tf";
  j["surface"] = s.name();
  j["c1"] = to_json(c1);
  j["c2"] = c2;
  j["window"] = to_json(window);
  j["window_default"] = default_window;
  const auto prior = prioritary_component(s, chern);
  j["prioritary_exists"] = prior.has_value();
  if (prior)
    j["prioritary"] = to_json(*prior);
  else
    j["prioritary_failure"] = *prioritary_failure_reason(s, chern);
  Json rows = Json::array();
  bool consistent = true;
  const DivisorClass K = canonical_class(s);
  for (const auto& c : enumerate_nonprioritary(s, c1, c2, window)) {
    Json row = to_json(c);
    if (check) {
      const DivisorClass& D = *c.D;
      const std::int64_t expanded = checked::sub(
          checked::add(checked::sub(chi_line_bundle(s, -c1), chi_self_rank2(s, c1, c2)), intersect(s, D, D - c1 - K)),
          c2);
      const bool ok = expanded == c.dimension && c.generic_locally_free == (c.n1 == 0) &&
                      c.singular_locus_length == c.n1;
      row["check"] = Json{{"dimension_expanded", expanded}, {"consistent", ok}};
      consistent = consistent && ok;
    }
    rows.push_back(std::move(row));
  }
  if (check) j["consistent"] = consistent;
  j["nonprioritary_count"] = rows.size();
  j["nonprioritary"] = std::move(rows);
  j["region"] = to_json(admissible_region_description(s, c1, c2));
  return j;
}

Json bn_report(const SurfaceModel& s, const DivisorClass& E, std::int64_t N, bool check) {
  const auto comps = bn_components(s, E, N);
  const auto threshold = bn_prioritary_threshold(s, E, N);
  Json j;
  j["command"] = "bn";
  j["surface"] = s.name();
  j["E"] = to_json(E);
  j["N"] = N;
  j["chi_E"] = chi_line_bundle(s, E);
  j["hilb_dim"] = 2 * N;
  j[threshold.factor == 4 ? "prioritary_threshold_x4" : "prioritary_threshold_x2"] = threshold.value;
  j["prioritary_special_case"] = threshold.special_case;
  Json rows = Json::array();
  bool consistent = true;
  for (const auto& c : comps) {
    Json row = to_json(c);
    if (check) {
      Json detail;
      bool ok = true;
      if (c.kind == BNKind::CurveType) {
        try {
          detail["tf_component"] = to_json(serre_correspondence(s, E, N, c));
          detail["serre_admissible"] = true;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::AdmissibilityViolation) throw;
          detail["serre_admissible"] = false;
          ok = false;
        }
      }
      if (ok) {
        const auto codims = codim_two_path_check(s, E, N, c);
        detail["codim_closed_form"] = codims.closed_form;
        detail["codim_stack_path"] = codims.stack_path;
        ok = codims.closed_form == codims.stack_path;
      }
      detail["consistent"] = ok;
      consistent = consistent && ok;
      row["check"] = std::move(detail);
    }
    rows.push_back(std::move(row));
  }
  j["components"] = std::move(rows);
  if (check) j["consistent"] = consistent;
  return j;
}

Json chi_report(const SurfaceModel& s, const SheafClass& f) {
  return Json{{"command", "chi"},
              {"surface", s.name()},
              {"rank", f.rank()},
              {"c1", to_json(f.c1())},
              {"c2", f.c2()},
              {"chi", chi_sheaf(s, f)},
              {"chi_self_pair", chi_pair(s, f, f)}};
}

Json cohom_report(const SurfaceModel& s, const DivisorClass& d) {
  const auto t = line_cohomology(s, d);
  return Json{{"command", "cohom"}, {"surface", s.name()}, {"D", to_json(d)}, {"h0", t.h0},
              {"h1", t.h1},         {"h2", t.h2},                 {"chi", chi_line_bundle(s, d)}};
}

namespace {

Json hilbert_json(const HilbertReport& r, std::uint64_t seed) {
  return Json{{"seed", seed},         {"length", r.length},     {"h0_E", r.h0_E},
              {"rank", r.rank},       {"h0_ideal", r.h0_ideal}, {"h1_ideal", r.h1_ideal},
              {"expected_h1", r.expected_h1}};
}

}  // namespace

Json verify_bn_report(const SurfaceModel& s, const DivisorClass& E, std::int64_t N, std::uint64_t seed,
                      int samples) {
  if (samples < 1) fail(ErrorKind::InvalidInput, "need at least one sample");
  Json j;
  j["command"] = "verify";
  j["mode"] = "bn";
  j["surface"] = s.name();
  j["E"] = to_json(E);
  j["N"] = N;
  j["seed"] = seed;
  j["samples"] = samples;
  bool ok = true;
  Json comps = Json::array();
  for (const auto& c : bn_components(s, E, N)) {
    if (c.kind != BNKind::CurveType) continue;
    Json entry;
    entry["component"] = to_json(c);
    Json results = Json::array();
    int positive = 0, failures = 0;
    for (int k = 0; k < samples; ++k) {
      const std::uint64_t sd = seed + static_cast<std::uint64_t>(k);
      try {
        const auto rep = hilbert_function(s, E, sample_component_configuration(s, E, N, c, sd));
        positive += rep.h1_ideal >= 1;
        results.push_back(hilbert_json(rep, sd));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::SamplingFailure && err.kind() != ErrorKind::DegenerateInput) throw;
        ++failures;
        results.push_back(Json{{"seed", sd}, {"error", err.what()}});
      }
    }
    entry["results"] = std::move(results);
    entry["positive"] = positive;
    entry["sampling_failures"] = failures;
    const bool pass = 20 * positive >= 19 * samples;
    entry["pass"] = pass;
    ok = ok && pass;
    comps.push_back(std::move(entry));
  }
  j["components"] = std::move(comps);

  Json general = Json::array();
  int zero = 0;
  for (int k = 0; k < samples; ++k) {
    const std::uint64_t sd = seed + static_cast<std::uint64_t>(k);
    const auto rep = hilbert_function(s, E, general_configuration(s, E, N, sd));
    zero += rep.h1_ideal == 0;
    general.push_back(hilbert_json(rep, sd));
  }
  j["general"] = Json{{"results", std::move(general)}, {"zero", zero}, {"pass", zero == samples}};
  ok = ok && zero == samples;
  j["ok"] = ok;
  return j;
}

Json cross_ruling_report(const DivisorClass& c1, std::int64_t c2, const Window& window) {
  const auto rep = cross_ruling_diagnostic(c1, c2, window);
  Json j;
  j["command"] = "verify";
  j["mode"] = "cross-ruling";
  j["surface"] = "quadric";
  j["c1"] = to_json(c1);
  j["c2"] = c2;
  j["window"] = to_json(window);
  Json first = Json::array(), second = Json::array(), matched = Json::array();
  for (const auto& c : rep.first) first.push_back(to_json(c));
  for (const auto& c : rep.second) second.push_back(to_json(c));
  for (const auto& [a, b] : rep.matched) matched.push_back(Json::array({a, b}));
  j["first"] = std::move(first);
  j["second"] = std::move(second);
  j["matched"] = std::move(matched);
  j["unmatched_first"] = rep.unmatched_first;
  j["unmatched_second"] = rep.unmatched_second;
  return j;
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

namespace {

std::string cls(const Json& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i].get<std::int64_t>());
  return out + ")";
}

std::string opt_int(const Json& j, const char* key) {
  return j.contains(key) ? std::to_string(j[key].get<std::int64_t>()) : std::string("n/a");
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void tf_table(const Json& r, std::ostream& os) {
  os << "TF(2, c1=" << cls(r["c1"]) << ", c2=" << r["c2"].get<std::int64_t>() << ") on " << r["surface"].get<std::string>()
     << "\n";
  if (r["prioritary_exists"].get<bool>()) {
    const auto& p = r["prioritary"];
    os << "prioritary: dimension " << p["dimension"].get<std::int64_t>() << ", embedding codim "
       << p["embedding_codim"].get<std::int64_t>() << ", generically locally free\n";
  } else {
    os << "no prioritary component: " << r["prioritary_failure"].get<std::string>() << "\n";
  }
  std::string window;
  for (const auto& rg : r["window"])
    window += (window.empty() ? "" : " x ") + std::string("[") + std::to_string(rg[0].get<std::int64_t>()) + "," +
              std::to_string(rg[1].get<std::int64_t>()) + "]";
  os << "nonprioritary components with D in " << window << ": " << r["nonprioritary_count"].get<std::int64_t>() << "\n";
  if (!r["nonprioritary"].empty()) {
    os << "  " << pad("D", 12) << pad("n1", 6) << pad("n2", 6) << pad("dim", 8) << pad("emb_codim", 11) << "locally_free\n";
    for (const auto& c : r["nonprioritary"])
      os << "  " << pad(cls(c["D"]), 12) << pad(std::to_string(c["n1"].get<std::int64_t>()), 6)
         << pad(std::to_string(c["n2"].get<std::int64_t>()), 6)
         << pad(std::to_string(c["dimension"].get<std::int64_t>()), 8) << pad(opt_int(c, "embedding_codim"), 11)
         << (c["generic_locally_free"].get<bool>() ? "yes" : "no") << "\n";
  }
  os << "admissible region:\n";
  for (const auto& ineq : r["region"]["inequalities"]) os << "  " << ineq.get<std::string>() << "\n";
}

void bn_table(const Json& r, std::ostream& os) {
  os << "W^0_N(E) on " << r["surface"].get<std::string>() << ", E=" << cls(r["E"]) << ", N=" << r["N"].get<std::int64_t>()
     << ", chi(O(E))=" << r["chi_E"].get<std::int64_t>() << "\n";
  os << "components: " << r["components"].size() << "\n";
  os << "  " << pad("kind", 12) << pad("D", 10) << pad("n", 5) << pad("gamma", 7) << pad("codim", 7) << pad("dim", 6)
     << "description\n";
  for (const auto& c : r["components"]) {
    const bool curve = c["kind"] == "curve";
    os << "  " << pad(c["kind"].get<std::string>(), 12) << pad(curve ? cls(c["D"]) : "-", 10)
       << pad(curve ? std::to_string(c["n"].get<std::int64_t>()) : "-", 5)
       << pad(curve ? std::to_string(c["gamma_degree"].get<std::int64_t>()) : "-", 7)
       << pad(std::to_string(c["codim"].get<std::int64_t>()), 7) << pad(std::to_string(c["dim"].get<std::int64_t>()), 6)
       << c["description"].get<std::string>() << "\n";
    if (c.contains("check")) {
      const auto& k = c["check"];
      os << "    check: " << (k["consistent"].get<bool>() ? "consistent" : "INCONSISTENT");
      if (k.contains("codim_closed_form"))
        os << " (codim " << k["codim_closed_form"].get<std::int64_t>() << " closed form, "
           << k["codim_stack_path"].get<std::int64_t>() << " via TF stack)";
      os << "\n";
    }
  }
}

void verify_table(const Json& r, std::ostream& os) {
  if (r["mode"] == "cross-ruling") {
    os << "cross-ruling diagnostic on quadric, c1=" << cls(r["c1"]) << ", c2=" << r["c2"].get<std::int64_t>() << "\n";
    os << "  first ruling: " << r["first"].size() << " components, second ruling: " << r["second"].size()
       << ", matched: " << r["matched"].size() << "\n";
    os << "  unmatched first: " << r["unmatched_first"].size() << ", unmatched second: " << r["unmatched_second"].size()
       << "\n";
    return;
  }
  os << "Hilbert-function oracle on " << r["surface"].get<std::string>() << ", E=" << cls(r["E"])
     << ", N=" << r["N"].get<std::int64_t>() << "\n";
  for (const auto& c : r["components"])
    os << "  D=" << cls(c["component"]["D"]) << " n=" << c["component"]["n"].get<std::int64_t>() << ": h1 >= 1 on "
       << c["positive"].get<int>() << "/" << r["samples"].get<int>() << (c["pass"].get<bool>() ? "  ok" : "  FAIL") << "\n";
  os << "  general position: h1 = 0 on " << r["general"]["zero"].get<int>() << "/" << r["samples"].get<int>()
     << (r["general"]["pass"].get<bool>() ? "  ok" : "  FAIL") << "\n";
}

}  // namespace

std::string render_table(const Json& r) {
  std::ostringstream os;
  const std::string cmd = r["command"].get<std::string>();
  if (cmd == "tf") {
    tf_table(r, os);
  } else if (cmd == "bn") {
    bn_table(r, os);
  } else if (cmd == "chi") {
    os << "chi(rank " << r["rank"].get<std::int64_t>() << ", c1=" << cls(r["c1"]) << ", c2=" << r["c2"].get<std::int64_t>()
       << ") on " << r["surface"].get<std::string>() << " = " << r["chi"].get<std::int64_t>() << "\n"
       << "chi(F,F) = " << r["chi_self_pair"].get<std::int64_t>() << "\n";
  } else if (cmd == "cohom") {
    os << "h^i(O(" << cls(r["D"]) << ")) on " << r["surface"].get<std::string>() << " = (" << r["h0"].get<std::int64_t>()
       << ", " << r["h1"].get<std::int64_t>() << ", " << r["h2"].get<std::int64_t>()
       << "), chi = " << r["chi"].get<std::int64_t>() << "\n";
  } else if (cmd == "verify") {
    verify_table(r, os);
  }
  return os.str();
}

std::string render_csv(const Json& r, bool header) {
  std::ostringstream os;
  const std::string cmd = r["command"].get<std::string>();
  const auto cell = [](const Json& d) {
    std::string out = "\"";
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i].get<std::int64_t>());
    return out + "\"";
  };
  if (cmd == "tf") {
    if (header) os << "c2,kind,D,n1,n2,dimension,embedding_codim,generic_locally_free,singular_locus_length\n";
    const auto c2 = r["c2"].get<std::int64_t>();
    if (r["prioritary_exists"].get<bool>()) {
      const auto& p = r["prioritary"];
      os << c2 << ",prioritary,,,," << p["dimension"].get<std::int64_t>() << "," << p["embedding_codim"].get<std::int64_t>()
         << ",true,0\n";
    }
    for (const auto& c : r["nonprioritary"])
      os << c2 << ",nonprioritary," << cell(c["D"]) << "," << c["n1"].get<std::int64_t>() << ","
         << c["n2"].get<std::int64_t>() << "," << c["dimension"].get<std::int64_t>() << ","
         << (c.contains("embedding_codim") ? std::to_string(c["embedding_codim"].get<std::int64_t>()) : "") << ","
         << (c["generic_locally_free"].get<bool>() ? "true" : "false") << "," << c["singular_locus_length"].get<std::int64_t>()
         << "\n";
  } else if (cmd == "bn") {
    if (header) os << "N,kind,D,n,gamma_degree,codim,dim\n";
    const auto N = r["N"].get<std::int64_t>();
    for (const auto& c : r["components"]) {
      if (c["kind"] == "curve")
        os << N << ",curve," << cell(c["D"]) << "," << c["n"].get<std::int64_t>() << ","
           << c["gamma_degree"].get<std::int64_t>() << ",";
      else
        os << N << ",prioritary,,,,";
      os << c["codim"].get<std::int64_t>() << "," << c["dim"].get<std::int64_t>() << "\n";
    }
  } else if (cmd == "chi") {
    if (header) os << "rank,c1,c2,chi,chi_self_pair\n";
    os << r["rank"].get<std::int64_t>() << "," << cell(r["c1"]) << "," << r["c2"].get<std::int64_t>() << ","
       << r["chi"].get<std::int64_t>() << "," << r["chi_self_pair"].get<std::int64_t>() << "\n";
  } else if (cmd == "cohom") {
    if (header) os << "D,h0,h1,h2,chi\n";
    os << cell(r["D"]) << "," << r["h0"].get<std::int64_t>() << "," << r["h1"].get<std::int64_t>() << ","
       << r["h2"].get<std::int64_t>() << "," << r["chi"].get<std::int64_t>() << "\n";
  } else if (cmd == "verify" && r["mode"] == "bn") {
    if (header) os << "D,n,seed,h1_ideal,expected_h1\n";
    for (const auto& c : r["components"])
      for (const auto& s : c["results"])
        if (s.contains("h1_ideal"))
          os << cell(c["component"]["D"]) << "," << c["component"]["n"].get<std::int64_t>() << ","
             << s["seed"].get<std::uint64_t>() << "," << s["h1_ideal"].get<std::int64_t>() << ","
             << s["expected_h1"].get<std::int64_t>() << "\n";
  } else {
    fail(ErrorKind::InvalidInput, "csv output is not available for this report");
  }
  return os.str();
}

}  // namespace tfbn::report
