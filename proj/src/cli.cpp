#include "herglotz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "herglotz/catalog.hpp"
#include "herglotz/circle_line.hpp"
#include "herglotz/distribution.hpp"
#include "herglotz/extraction.hpp"
#include "herglotz/reconstruction.hpp"
#include "herglotz/serialization.hpp"

namespace herglotz::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string spec_path;
  std::string out_dir;
  std::string window;
  std::string sigma_points;
  std::optional<double> y0, ratio;
  std::optional<int> steps;
  std::optional<double> tol;
  std::string side = "upper";
  bool force = false;
  // command specific
  std::optional<double> delta;
  int nodes = 129;
  std::string matrix;
  std::vector<std::string> checks;
};

// Thrown for bad configuration; maps to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ConfigError("not a number: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("not a number: " + s);
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(parse_real(item));
  }
  return out;
}

class Job {
 public:
  explicit Job(const Options& o) : opt(o) {
    if (opt.spec_path.empty()) throw ConfigError("--spec is required");
    if (!fs::exists(opt.spec_path)) throw ConfigError("spec file not found: " + opt.spec_path);
    file = read_json_file(opt.spec_path);
    base_dir = fs::path(opt.spec_path).parent_path();
    if (opt.tol && !(*opt.tol > 0.0)) throw ConfigError("--tol must be positive");
    if (opt.side != "upper" && opt.side != "lower") throw ConfigError("--side must be upper or lower");
  }

  const Options& opt;
  json file;
  fs::path base_dir;

  [[nodiscard]] AnalyticFunction function() const {
    const json& fj = file.contains("function") ? file.at("function") : file;
    return catalog_build(catalog_spec_from_json(fj, base_dir));
  }

  [[nodiscard]] std::pair<double, double> window(std::pair<double, double> fallback = {-1.0, 1.0}) const {
    std::vector<double> w;
    if (!opt.window.empty()) w = parse_list(opt.window);
    else if (file.contains("window"))
      for (const auto& v : file.at("window")) w.push_back(json_real(v));
    else return fallback;
    if (w.size() != 2 || !(w[0] < w[1])) throw ConfigError("window must be a,b with a < b");
    return {w[0], w[1]};
  }

  [[nodiscard]] LimitSchedule schedule(LimitSchedule base) const {
    if (opt.y0) base.y0 = *opt.y0;
    if (opt.ratio) base.ratio = *opt.ratio;
    if (opt.steps) {
      base.steps = *opt.steps;
      base.order = std::min(base.order, base.steps - 1);
    }
    base.validate();
    return base;
  }

  [[nodiscard]] double tol(double fallback) const { return opt.tol ? *opt.tol : fallback; }
  [[nodiscard]] Side side() const { return opt.side == "lower" ? Side::lower : Side::upper; }

  void write(const std::string& name, const std::string& text) const {
    if (opt.out_dir.empty()) return;
    fs::create_directories(opt.out_dir);
    write_text_file(fs::path(opt.out_dir) / name, text);
  }
};

bool settled(const ExtrapolatedLimit& lim, double tol) {
  return std::isfinite(lim.error_estimate) && lim.error_estimate <= tol * (1.0 + std::abs(lim.value));
}

// Boundary support points of f inside [lo, hi] that behave like atoms.
std::vector<double> atom_candidates(const AnalyticFunction& f, double lo, double hi) {
  std::vector<double> c = f.support().breakpoints_in(lo, hi);
  c.erase(std::remove_if(c.begin(), c.end(), [](double x) { return !std::isfinite(x); }), c.end());
  return c;
}

void refuse_atoms(const AnalyticFunction& f, double lo, double hi, const Options& opt) {
  const std::vector<double> atoms = f.support().points_in(lo, hi);
  if (!atoms.empty() && !opt.force)
    throw ConfigError("window contains the boundary atom at " + format_double(atoms.front()) +
                      "; use --force to run anyway");
}

int cmd_extract(const Job& job, std::ostream& out, std::ostream& err) {
  const AnalyticFunction f = job.function();
  const auto [lo, hi] = job.window();
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ConfigError("extract needs a bounded window");
  const double tol = job.tol(kTableauTolerance);

  json summary;
  summary["function"] = f.descriptor;
  summary["window"] = {lo, hi};

  SimpleScanReport scan = simple_scan(f, lo, hi);
  if (scan.bounded && f.support().infinity) scan = simple_scan(f, hi, kInf);
  summary["simple_scan"] = scan.to_json();
  if (!scan.bounded) {
    err << scan.diagnosis() << "\n";
    summary["status"] = "non-simple";
    job.write("summary.json", dump_json(summary));
    out << dump_json(summary);
    return kDiverged;
  }

  bool all_converged = true;
  json atoms = json::array();
  const std::vector<double> cands = atom_candidates(f, lo, hi);
  for (double x : cands) {
    const ExtrapolatedLimit lim = atomic_mass_limit(f, x, job.schedule(LimitSchedule::atomic()));
    const bool ok = settled(lim, tol);
    all_converged = all_converged && ok;
    atoms.push_back({{"loc", x}, {"mass", complex_to_json(lim.value)}, {"error", lim.error_estimate}, {"converged", ok}});
  }
  if (f.support().infinity) {
    const ExtrapolatedLimit lim = atomic_mass_limit_at_infinity(f);
    const bool ok = settled(lim, tol);
    all_converged = all_converged && ok;
    atoms.push_back(
        {{"loc", "inf"}, {"mass", complex_to_json(lim.value)}, {"error", lim.error_estimate}, {"converged", ok}});
  }

  const int n = job.file.value("resolution", 141);
  if (n < 2) throw ConfigError("resolution must be at least 2");
  std::vector<double> xs;
  for (int k = 0; k < n; ++k) {
    const double x = lo + (hi - lo) * k / (n - 1);
    const bool at_atom = std::any_of(cands.begin(), cands.end(), [&](double c) {
      return std::abs(x - c) <= 1e-9 * std::max(1.0, std::abs(c));
    });
    if (!at_atom) xs.push_back(x);
  }
  std::ostringstream csv;
  csv << "x,re,im,error_est\n";
  int unconverged = 0;
  const LimitSchedule base = job.schedule(LimitSchedule::line());
  for (double x : xs) {
    double dist = kInf;
    for (double c : cands) dist = std::min(dist, std::abs(x - c));
    const ExtrapolatedLimit lim = density_at(f, x, base.starting_at(0.25 * dist));
    if (!settled(lim, tol)) ++unconverged;
    csv << format_double(x) << ',' << format_double(lim.value.real()) << ',' << format_double(lim.value.imag())
        << ',' << format_double(lim.error_estimate) << '\n';
  }
  all_converged = all_converged && unconverged == 0;

  summary["atoms"] = atoms;
  summary["density_nodes"] = xs.size();
  summary["unconverged_density_nodes"] = unconverged;
  summary["status"] = all_converged ? "converged" : "divergent";
  job.write("density.csv", csv.str());
  job.write("atoms.json", dump_json(atoms));
  job.write("summary.json", dump_json(summary));
  out << dump_json(summary);
  if (!all_converged) err << "some limits did not settle to the tolerance " << tol << "\n";
  return all_converged ? kOk : kDiverged;
}

int cmd_reconstruct(const Job& job, std::ostream& out, std::ostream& err) {
  const AnalyticFunction f = job.function();
  json rj = job.file;
  if (!job.opt.window.empty()) {
    const auto [lo, hi] = job.window();
    rj["window"] = {lo, hi};
  }
  if (!job.opt.sigma_points.empty()) {
    json sig = json::array();
    for (double s : parse_list(job.opt.sigma_points)) sig.push_back(real_to_json(s));
    rj["sigma"] = sig;
  }
  rj.erase("function");
  ReconstructionSpec spec = reconstruction_spec_from_json(rj);
  spec.density_schedule = job.schedule(spec.density_schedule);

  std::vector<Complex> probes;
  if (job.file.contains("probes"))
    for (const auto& p : job.file.at("probes")) probes.push_back(json_complex(p));
  else probes = {{0.0, 1.0}, {0.0, 2.0}, {-1.0, 2.0}};
  const double bound = job.tol(job.file.value("residual_bound", 1e-4));

  const ReconstructionResult res = reconstruct(f, spec);
  const double residual = resynthesis_residual(f, res, probes);

  json measure = measure_to_json(res.measure);
  json diag = res.diagnostics;
  json residues = json::array();
  for (const auto& [s, r] : res.residues) residues.push_back({{"loc", real_to_json(s)}, {"residue", complex_to_json(r)}});
  diag["residues"] = residues;
  diag["residual"] = residual;
  diag["residual_bound"] = bound;
  json probe_j = json::array();
  for (const Complex& z : probes) probe_j.push_back(complex_to_json(z));
  diag["probes"] = probe_j;

  json summary = {{"function", f.descriptor},
                  {"constant", complex_to_json(res.constant)},
                  {"atoms", measure["atoms"]},
                  {"residues", residues},
                  {"window_truncated", res.window_truncated},
                  {"residual", residual},
                  {"pass", residual <= bound}};
  job.write("measure.json", dump_json(measure));
  job.write("diagnostics.json", dump_json(diag));
  out << dump_json(summary);
  if (residual > bound) {
    err << "resynthesis residual " << residual << " exceeds " << bound << "\n";
    return kCheckFailed;
  }
  return kOk;
}

json run_check(const std::string& name, const Job& job) {
  const double tol = job.tol(1e-4);
  if (name == "appendixC-identity") {
    double worst = 0.0;
    json rows = json::array();
    for (const auto& [s, y] : std::vector<std::pair<double, double>>{{0, 1}, {2, 0.5}, {-3, 0.1}}) {
      const double q = residue_identity_quadrature(s, y), c = residue_identity_closed_form(s, y);
      worst = std::max(worst, std::abs(q - c));
      rows.push_back({{"s", s}, {"y", y}, {"quadrature", q}, {"closed_form", c}});
    }
    return {{"name", name}, {"pass", worst <= 1e-10}, {"max_error", worst}, {"rows", rows}};
  }
  const AnalyticFunction f = job.function();
  if (name == "vladimirov") {
    const double norm = vladimirov_norm(f), bound = vladimirov_bound(f);
    return {{"name", name}, {"pass", norm <= bound + 1e-9}, {"norm", norm}, {"bound", bound}};
  }
  if (name == "simple") {
    const auto [lo, hi] = job.window();
    const SimpleScanReport r = simple_scan(f, lo, hi);
    return {{"name", name}, {"pass", r.bounded}, {"scan", r.to_json()}};
  }
  if (name == "circle-line") {
    const auto [lo, hi] = job.window();
    refuse_atoms(f, lo, hi, job.opt);
    const GapReport r = consistency_gap(f, TestFunction::bump(lo, hi), job.side());
    return {{"name", name}, {"pass", r.gap() <= tol}, {"report", r.to_json()}};
  }
  if (name == "duality") {
    const auto [lo, hi] = job.window();
    if (lo <= 0.0 && hi >= 0.0) throw ConfigError("duality needs a window away from 0");
    refuse_atoms(f, lo, hi, job.opt);
    const GapReport r = inversion_duality_gap(f, TestFunction::bump(lo, hi), job.side());
    return {{"name", name}, {"pass", r.gap() <= tol}, {"report", r.to_json()}};
  }
  if (name == "joined") {
    const GapReport r = joined_distribution_check(f, TestFunction::constant(1.0), job.side());
    return {{"name", name}, {"pass", r.gap() <= tol}, {"report", r.to_json()}};
  }
  throw ConfigError("unknown check: " + name);
}

int cmd_check(const Job& job, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = job.opt.checks;
  if (names.empty() && job.file.contains("checks")) names = job.file.at("checks").get<std::vector<std::string>>();
  if (names.empty()) names = {"vladimirov", "appendixC-identity", "circle-line"};
  json report = json::array();
  bool all = true;
  for (const auto& name : names) {
    json r = run_check(name, job);
    all = all && r.at("pass").get<bool>();
    if (!r.at("pass").get<bool>()) err << "check " << name << " failed\n";
    report.push_back(std::move(r));
  }
  const json summary = {{"checks", report}, {"pass", all}};
  job.write("check.json", dump_json(summary));
  out << dump_json(summary);
  return all ? kOk : kCheckFailed;
}

int cmd_mobius(const Job& job, std::ostream& out, std::ostream&) {
  const json& mj = job.file.contains("measure") ? job.file.at("measure") : job.file;
  const BoundaryMeasure m =
      mj.is_string() ? measure_from_json(read_json_file(job.base_dir / mj.get<std::string>())) : measure_from_json(mj);
  std::vector<double> a;
  if (!job.opt.matrix.empty()) a = parse_list(job.opt.matrix);
  else if (job.file.contains("matrix")) a = job.file.at("matrix").get<std::vector<double>>();
  if (a.size() != 4) throw ConfigError("mobius needs --matrix a,b,c,d");
  const BoundaryMeasure pushed = pushforward_mobius(m, MobiusMatrix(a[0], a[1], a[2], a[3]));
  const std::string text = dump_json(measure_to_json(pushed));
  job.write("measure.json", text);
  out << text;
  return kOk;
}

int cmd_phi_profile(const Job& job, std::ostream& out, std::ostream&) {
  const AnalyticFunction f = job.function();
  const auto [a, b] = job.window();
  const double delta = job.opt.delta ? *job.opt.delta : job.file.value("delta", 0.25);
  if (!(delta > 0.0)) throw ConfigError("--delta must be positive");
  // The lower-side kernel is the conjugate of the upper-side kernel of f*.
  const bool lower = job.side() == Side::lower;
  const PhiProfile profile = phi_profile(lower ? star_reflect(f) : f, a, b, delta, job.opt.nodes);
  std::string csv = profile.to_csv();
  if (lower) {
    std::ostringstream flipped;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    flipped << line << '\n';
    while (std::getline(in, line)) {
      const auto cut = line.rfind(',');
      const double im = parse_real(line.substr(cut + 1));
      flipped << line.substr(0, cut + 1) << format_double(-im) << '\n';
    }
    csv = flipped.str();
  }
  job.write("phi.csv", csv);
  out << csv;
  return kOk;
}

int cmd_circle_line(const Job& job, std::ostream& out, std::ostream& err) {
  const AnalyticFunction f = job.function();
  const auto [lo, hi] = job.window();
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ConfigError("circle-line needs a bounded window");
  refuse_atoms(f, lo, hi, job.opt);
  const GapReport r = consistency_gap(f, TestFunction::bump(lo, hi), job.side(),
                                      job.schedule(circle_schedule()), job.schedule(LimitSchedule::line()));
  const double tol = job.tol(1e-4);
  const std::string text = dump_json(r.to_json());
  job.write("circle_line.json", text);
  out << text;
  if (r.gap() > tol) {
    err << "gap " << r.gap() << " exceeds " << tol << "\n";
    return kCheckFailed;
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--spec", o.spec_path, "function or job spec (JSON)")->required();
  sub->add_option("--out", o.out_dir, "output directory for artifacts");
  sub->add_option("--window", o.window, "window a,b");
  sub->add_option("--y0", o.y0, "first height of the limit schedule");
  sub->add_option("--ratio", o.ratio, "geometric ratio of the limit schedule");
  sub->add_option("--steps", o.steps, "number of heights");
  sub->add_option("--tol", o.tol, "tolerance override");
  sub->add_option("--side", o.side, "upper or lower");
  sub->add_flag("--force", o.force, "run even when the window contains boundary atoms");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representing measures of Herglotz-Nevanlinna functions"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<int(const Job&, std::ostream&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* extract = app.add_subcommand("extract", "boundary densities and atoms on a window");
  add_common(extract, o);
  commands.emplace_back(extract, cmd_extract);

  auto* rec = app.add_subcommand("reconstruct", "full representing measure with resynthesis check");
  add_common(rec, o);
  rec->add_option("--sigma-points", o.sigma_points, "exceptional points, e.g. 0,1,inf");
  commands.emplace_back(rec, cmd_reconstruct);

  auto* check = app.add_subcommand("check", "invariant checks");
  add_common(check, o);
  check->add_option("--check", o.checks,
                    "vladimirov | appendixC-identity | circle-line | duality | joined | simple (repeatable)");
  commands.emplace_back(check, cmd_check);

  auto* mob = app.add_subcommand("mobius", "push a measure file forward under a real Mobius matrix");
  add_common(mob, o);
  mob->add_option("--matrix", o.matrix, "a,b,c,d");
  commands.emplace_back(mob, cmd_mobius);

  auto* phi = app.add_subcommand("phi-profile", "kernel Phi on a window as CSV");
  add_common(phi, o);
  phi->add_option("--delta", o.delta, "cutoff height");
  phi->add_option("--nodes", o.nodes, "nodes per piece");
  commands.emplace_back(phi, cmd_phi_profile);

  auto* cl = app.add_subcommand("circle-line", "disc/line consistency gap for a bump on the window");
  add_common(cl, o);
  commands.emplace_back(cl, cmd_circle_line);

  try {
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        const Job job(o);
        return handler(job, out, err);
      }
    }
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const NonSimpleBehavior& e) {
    err << e.what() << "\n";
    return kDiverged;
  } catch (const ConvergenceError& e) {
    err << e.what() << "\n";
    return kDiverged;
  } catch (const fs::filesystem_error& e) {
    err << "file error: " << e.what() << "\n";
    return kConfigError;
  } catch (const json::exception& e) {
    err << "malformed spec: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace herglotz::cli
