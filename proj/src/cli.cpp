#include "tfbn/cli.hpp"

#include <charconv>
#include <fstream>
#include <future>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tfbn/bn.hpp"
#include "tfbn/checked.hpp"
#include "tfbn/euler.hpp"
#include "tfbn/report.hpp"

namespace tfbn::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow:
      return OverflowExit;
    case ErrorKind::AdmissibilityViolation:
    case ErrorKind::SamplingFailure:
      return ConsistencyFailure;
    default:
      return InvalidInputExit;
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::int64_t v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) fail(ErrorKind::InvalidInput, "bad integer for " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

DivisorClass parse_class(const std::string& text, std::size_t rank, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != rank)
    fail(ErrorKind::DimensionMismatch, what + " needs " + std::to_string(rank) + " coordinate(s), got '" + text + "'");
  DivisorClass d;
  for (const auto& p : parts) d.coeffs.push_back(parse_int(p, what));
  return d;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const std::string& what) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const auto v = parse_int(text, what);
    return {v, v};
  }
  return {parse_int(text.substr(0, pos), what), parse_int(text.substr(pos + 2), what)};
}

Window parse_window(const std::string& text, std::size_t rank) {
  const auto parts = split(text, ',');
  Window w;
  if (parts.size() == 1) {
    const auto r = parse_range(parts[0], "--window");
    w.ranges.assign(rank, r);
  } else if (parts.size() == rank) {
    for (const auto& p : parts) w.ranges.push_back(parse_range(p, "--window"));
  } else {
    fail(ErrorKind::DimensionMismatch, "--window needs 1 or " + std::to_string(rank) + " ranges, got '" + text + "'");
  }
  return w;
}

Window default_window(std::size_t rank, std::int64_t c2) {
  const std::int64_t k = checked::add(c2 < 0 ? checked::neg(c2) : c2, 8);
  return Window::box(rank, -k, k);
}

std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidInput, "config line " + std::to_string(lineno) + " has no '='");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out.emplace_back(key, value);
  }
  return out;
}

namespace {

const std::set<std::string> kSubcommands = {"tf", "bn", "chi", "cohom", "survey", "verify"};
const std::set<std::string> kBoolKeys = {"check", "cross-ruling"};

struct Options {
  std::string surface = "p2";
  std::string c1, c2, e, N, D, window, format = "table", out, target;
  std::int64_t rank = 1;
  std::uint64_t seed = 1;
  int samples = 20;
  int jobs = 1;
  bool check = false;
  bool cross_ruling = false;
};

// Splices config-file options in right after the subcommand name so that
// explicit flags, which come later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) fail(ErrorKind::InvalidInput, "--config needs a file name");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config.empty()) return rest;
  std::ifstream in(config);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read config file '" + config + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> injected;
  for (const auto& [key, value] : parse_config(buf.str())) {
    if (kBoolKeys.contains(key)) {
      if (value == "true" || value == "1" || value == "yes" || value == "on") injected.push_back("--" + key);
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  auto sub = rest.begin();
  while (sub != rest.end() && !kSubcommands.contains(*sub)) ++sub;
  if (sub == rest.end()) fail(ErrorKind::InvalidInput, "no subcommand given");
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

std::size_t class_rank(const SurfaceModel& s) { return static_cast<std::size_t>(s.ns_rank()); }

void require(const std::string& value, const char* flag) {
  if (value.empty()) fail(ErrorKind::InvalidInput, std::string(flag) + " is required");
}

std::string emit(const report::Json& j, const std::string& format) {
  if (format == "json") return report::dump_pretty(j);
  if (format == "csv") return report::render_csv(j);
  return report::render_table(j);
}

Window window_for(const Options& o, std::size_t rank, std::int64_t c2, std::ostream& err, bool& defaulted, bool warn) {
  if (!o.window.empty()) return parse_window(o.window, rank);
  defaulted = true;
  const Window w = default_window(rank, c2);
  if (warn)
    err << "warning: no --window given, using D in [" << w.ranges[0].first << "," << w.ranges[0].second
        << "] per coordinate\n";
  return w;
}

bool consistent(const report::Json& j) { return !j.contains("consistent") || j["consistent"].get<bool>(); }

int run_survey(const Options& o, std::string& text, std::ostream& err) {
  const SurfaceModel s = parse_surface(o.surface);
  const std::size_t rank = class_rank(s);
  std::vector<std::function<report::Json()>> tasks;
  bool any_default = false;
  if (o.target == "tf") {
    require(o.c1, "--c1");
    require(o.c2, "--c2");
    const DivisorClass c1 = parse_class(o.c1, rank, "--c1");
    const auto [lo, hi] = parse_range(o.c2, "--c2");
    for (std::int64_t c2 = lo; c2 <= hi; ++c2) {
      bool defaulted = false;
      const Window w = window_for(o, rank, c2, err, defaulted, false);
      any_default = any_default || defaulted;
      tasks.push_back([=, &s, check = o.check] { return report::tf_report(s, c1, c2, w, defaulted, check); });
    }
  } else if (o.target == "bn") {
    require(o.e, "--e");
    require(o.N, "--N");
    const DivisorClass E = parse_class(o.e, rank, "--e");
    const auto [lo, hi] = parse_range(o.N, "--N");
    for (std::int64_t N = lo; N <= hi; ++N)
      tasks.push_back([=, &s, check = o.check] { return report::bn_report(s, E, N, check); });
  } else {
    fail(ErrorKind::InvalidInput, "survey target must be tf or bn");
  }
  if (any_default) err << "warning: no --window given, using D in [-(|c2|+8), |c2|+8] per coordinate\n";

  std::vector<report::Json> records(tasks.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
  for (std::size_t start = 0; start < tasks.size(); start += jobs) {
    std::vector<std::future<report::Json>> pending;
    for (std::size_t i = start; i < std::min(tasks.size(), start + jobs); ++i)
      pending.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, tasks[i]));
    for (std::size_t i = 0; i < pending.size(); ++i) records[start + i] = pending[i].get();
  }

  std::string body;
  bool ok = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    ok = ok && consistent(r);
    if (o.format == "json")
      body += report::dump_line(r);
    else if (o.format == "csv")
      body += report::render_csv(r, i == 0);
    else
      body += (i ? "\n" : "") + report::render_table(r);
  }
  text = body;
  return ok ? Ok : ConsistencyFailure;
}

int dispatch(const std::string& cmd, const Options& o, std::string& text, std::ostream& err) {
  if (cmd == "survey") return run_survey(o, text, err);
  const SurfaceModel s = parse_surface(o.surface);
  const std::size_t rank = class_rank(s);
  report::Json j;
  int code = Ok;
  if (cmd == "tf") {
    require(o.c1, "--c1");
    require(o.c2, "--c2");
    const DivisorClass c1 = parse_class(o.c1, rank, "--c1");
    const std::int64_t c2 = parse_int(o.c2, "--c2");
    bool defaulted = false;
    const Window w = window_for(o, rank, c2, err, defaulted, true);
    j = report::tf_report(s, c1, c2, w, defaulted, o.check);
  } else if (cmd == "bn") {
    require(o.e, "--e");
    require(o.N, "--N");
    j = report::bn_report(s, parse_class(o.e, rank, "--e"), parse_int(o.N, "--N"), o.check);
  } else if (cmd == "chi") {
    require(o.c1, "--c1");
    const std::int64_t c2 = o.c2.empty() ? 0 : parse_int(o.c2, "--c2");
    j = report::chi_report(s, SheafClass(o.rank, parse_class(o.c1, rank, "--c1"), c2));
  } else if (cmd == "cohom") {
    require(o.D, "--D");
    j = report::cohom_report(s, parse_class(o.D, rank, "--D"));
  } else if (cmd == "verify") {
    if (o.cross_ruling) {
      if (s.kind() != SurfaceKind::Quadric) fail(ErrorKind::UnsupportedSurface, "--cross-ruling needs --surface quadric");
      require(o.c1, "--c1");
      require(o.c2, "--c2");
      const std::int64_t c2 = parse_int(o.c2, "--c2");
      bool defaulted = false;
      const Window w = window_for(o, rank, c2, err, defaulted, true);
      j = report::cross_ruling_report(parse_class(o.c1, rank, "--c1"), c2, w);
    } else {
      require(o.e, "--e");
      require(o.N, "--N");
      j = report::verify_bn_report(s, parse_class(o.e, rank, "--e"), parse_int(o.N, "--N"), o.seed, o.samples);
      if (!j["ok"].get<bool>()) code = ConsistencyFailure;
    }
  }
  if (o.check && !consistent(j)) code = ConsistencyFailure;
  text = emit(j, o.format);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> args = expand_config(raw_args);

    CLI::App app{"Components of torsion-free sheaf moduli and Brill-Noether loci of points on rational and ruled surfaces",
                 "tfbn"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--config", "key = value file whose keys mirror the long flags");
    Options o;

    const auto surface = [&](CLI::App* sub) {
      sub->add_option("--surface", o.surface, "p2 | quadric | product:g=G | ruled:g=G,e=E,assert-no-negative-curves")
          ->capture_default_str();
    };
    const auto output = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "table | json | csv")
          ->check(CLI::IsMember({"table", "json", "csv"}))
          ->capture_default_str();
      sub->add_option("--out", o.out, "write the report to this file");
    };

    auto* tf = app.add_subcommand("tf", "Components of TF_S(2, c1, c2)");
    surface(tf);
    tf->add_option("--c1", o.c1, "first Chern class, a or a,b");
    tf->add_option("--c2", o.c2, "second Chern class");
    tf->add_option("--window", o.window, "range of D, lo..hi or lo..hi,lo..hi");
    tf->add_flag("--check", o.check, "recompute dimensions by a second formula");
    output(tf);

    auto* bn = app.add_subcommand("bn", "Components of W^0_N(E) in Hilb^N(S)");
    surface(bn);
    bn->add_option("--e", o.e, "line bundle class E, a or a,b");
    bn->add_option("--N", o.N, "number of points");
    bn->add_flag("--check", o.check, "cross-check against the TF stack");
    output(bn);

    auto* chi = app.add_subcommand("chi", "Euler characteristic of a sheaf class");
    surface(chi);
    chi->add_option("--rank", o.rank, "rank")->capture_default_str();
    chi->add_option("--c1", o.c1, "first Chern class");
    chi->add_option("--c2", o.c2, "second Chern class (default 0)");
    output(chi);

    auto* cohom = app.add_subcommand("cohom", "Cohomology of a generic line bundle");
    surface(cohom);
    cohom->add_option("--D", o.D, "divisor class, a or a,b");
    output(cohom);

    auto* survey = app.add_subcommand("survey", "Sweep tf over a c2 range or bn over an N range (JSON Lines)");
    survey->add_option("target", o.target, "tf | bn")->required()->check(CLI::IsMember({"tf", "bn"}));
    surface(survey);
    survey->add_option("--c1", o.c1, "first Chern class");
    survey->add_option("--c2", o.c2, "c2 or lo..hi");
    survey->add_option("--e", o.e, "line bundle class E");
    survey->add_option("--N", o.N, "N or lo..hi");
    survey->add_option("--window", o.window, "range of D");
    survey->add_option("--jobs", o.jobs, "parameter points evaluated in parallel")->capture_default_str();
    survey->add_flag("--check", o.check, "run the consistency checks on every record");
    output(survey);

    auto* verify = app.add_subcommand("verify", "Exact Hilbert-function check on sampled configurations");
    surface(verify);
    verify->add_option("--e", o.e, "line bundle class E");
    verify->add_option("--N", o.N, "number of points");
    verify->add_option("--seed", o.seed, "first seed")->capture_default_str();
    verify->add_option("--samples", o.samples, "samples per component")->capture_default_str();
    verify->add_flag("--cross-ruling", o.cross_ruling, "compare TF components under the ruling swap");
    verify->add_option("--c1", o.c1, "first Chern class (cross-ruling)");
    verify->add_option("--c2", o.c2, "second Chern class (cross-ruling)");
    verify->add_option("--window", o.window, "range of D (cross-ruling)");
    output(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      std::ostringstream msg;
      const int code = app.exit(e, msg, msg);
      if (code == 0) {
        out << msg.str();
        return Ok;
      }
      err << msg.str();
      return InvalidInputExit;
    }
    if (survey->parsed() && o.format == "table" && survey->count("--format") == 0) o.format = "json";

    std::string cmd;
    for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
    std::string text;
    const int code = dispatch(cmd, o, text, err);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f) fail(ErrorKind::InvalidInput, "cannot write '" + o.out + "'");
      f << text;
    }
    if (code == ConsistencyFailure) err << "error: consistency check failed\n";
    return code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace tfbn::cli
