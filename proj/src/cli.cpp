#include "wgcoe/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wgcoe/cache.hpp"
#include "wgcoe/coe.hpp"
#include "wgcoe/comb/characters.hpp"
#include "wgcoe/comb/pairing.hpp"
#include "wgcoe/errors.hpp"
#include "wgcoe/exact/render.hpp"
#include "wgcoe/sampling.hpp"
#include "wgcoe/unitary.hpp"
#include "wgcoe/weingarten.hpp"

namespace wgcoe::cli {

namespace {

using comb::IndexSequence;
using comb::Partition;
using exact::BigInt;
using exact::BigRational;
using exact::RationalFunction;
using nlohmann::ordered_json;

ordered_json integers(const exact::IntCoefficients& c) {
  ordered_json out = ordered_json::array();
  for (const auto& x : c) out.push_back(x.get_str());
  return out;
}

/// One exact result: a rational function of N or a number at fixed N.
struct Value {
  RationalFunction f;
  wg::Regime regime = wg::Regime::symbolic;
  std::optional<long> N;
  std::optional<exact::LaurentSeries> series;

  std::string text() const {
    std::string s = exact::render(f);
    if (regime == wg::Regime::truncated) s += " [truncated]";
    return s;
  }

  void write_json(ordered_json& j) const {
    const auto form = exact::integer_form(f);
    j["regime"] = wg::to_string(regime);
    j["value"] = exact::render(f);
    j["numerator"] = integers(form.numerator);
    j["denominator"] = integers(form.denominator);
    if (series) j["series"] = series->to_string();
  }
};

Value symbolic(RationalFunction f, unsigned series_terms) {
  Value v{std::move(f), wg::Regime::symbolic, std::nullopt, std::nullopt};
  if (series_terms > 0) v.series = exact::series(v.f, series_terms);
  return v;
}

Value concrete(const BigRational& q, wg::Regime regime, long N) {
  return {RationalFunction(q), regime, N, std::nullopt};
}

struct Globals {
  bool json = false;
  std::string cache_dir;
};

struct Context {
  std::ostream& out;
  const Globals& globals;
};

void emit_value(Context& ctx, const std::string& command, ordered_json input, const Value& v) {
  if (ctx.globals.json) {
    ordered_json j;
    j["command"] = command;
    j["input"] = std::move(input);
    v.write_json(j);
    ctx.out << j.dump(2) << '\n';
    return;
  }
  ctx.out << v.text() << '\n';
  if (v.series) ctx.out << "series: " << v.series->to_string() << '\n';
}

void require_positive(long N) {
  if (N < 1) throw DomainError("N must be at least 1, got " + std::to_string(N));
}

// ---- wg ----------------------------------------------------------------

struct WgArgs {
  int n = 0;
  std::string cycle_type, permutation;
  std::optional<long> N;
  bool symbolic = false;
  unsigned series = 0;
};

int run_wg(Context& ctx, const WgArgs& a) {
  if (a.cycle_type.empty() == a.permutation.empty())
    throw DomainError("give exactly one of --cycle-type and --permutation");
  Partition rho;
  std::string label;
  if (!a.cycle_type.empty()) {
    rho = Partition::parse(a.cycle_type);
    label = rho.to_string();
  } else {
    if (a.n < 1) throw DomainError("--permutation needs --n");
    const auto sigma = comb::Permutation::parse_cycles(a.permutation, a.n);
    rho = sigma.cycle_type();
    label = sigma.to_cycle_string();
  }
  const int n = a.n > 0 ? a.n : rho.size();
  if (rho.size() != n)
    throw DomainError("cycle type " + rho.to_string() + " is not a partition of " + std::to_string(n));
  if (a.N && a.series > 0) throw DomainError("--series applies to symbolic results only");

  ordered_json input{{"n", n}, {"cycle_type", rho.to_string()}};
  if (!a.permutation.empty()) input["permutation"] = label;
  if (a.N) {
    require_positive(*a.N);
    input["N"] = *a.N;
    emit_value(ctx, "wg", input, concrete(wg::wg_eval(n, rho, *a.N), wg::regime_for(n, *a.N), *a.N));
  } else {
    emit_value(ctx, "wg", input, symbolic(wg::wg_symbolic(n, rho), a.series));
  }
  return kOk;
}

// ---- cue-moment --------------------------------------------------------

struct CueArgs {
  std::string i, j, ip, jp;
  std::optional<long> N;
  bool symbolic = false;
  unsigned series = 0;
  int max_degree = cue::Limits{}.max_degree;
};

int run_cue(Context& ctx, const CueArgs& a) {
  if (a.N && a.series > 0) throw DomainError("--series applies to symbolic results only");
  const int bound = a.N ? static_cast<int>(*a.N) : 0;
  if (a.N) require_positive(*a.N);
  cue::CueMomentSpec spec{IndexSequence::parse(a.i, bound), IndexSequence::parse(a.j, bound),
                          IndexSequence::parse(a.ip, bound), IndexSequence::parse(a.jp, bound), a.N};
  const auto m = cue::cue_joint_moment(spec, cue::Limits{a.max_degree});
  ordered_json input{{"i", spec.i.to_string()},
                     {"j", spec.j.to_string()},
                     {"i_prime", spec.i_prime.to_string()},
                     {"j_prime", spec.j_prime.to_string()}};
  if (a.N) input["N"] = *a.N;
  if (const auto* f = std::get_if<RationalFunction>(&m.value)) {
    emit_value(ctx, "cue-moment", input, symbolic(*f, m.vanishes ? 0 : a.series));
  } else {
    emit_value(ctx, "cue-moment", input, concrete(std::get<BigRational>(m.value), m.regime, *a.N));
  }
  return kOk;
}

// ---- coe-moment --------------------------------------------------------

struct CoeArgs {
  std::string mode;
  int n = 0;
  std::string j, jp;
  std::optional<long> N;
  bool symbolic = false;
  unsigned series = 0;
  int max_n = coe::Limits{}.max_n;
};

IndexSequence repeated(const std::vector<int>& block, int n) {
  std::vector<int> e;
  for (int k = 0; k < n; ++k) e.insert(e.end(), block.begin(), block.end());
  return IndexSequence(std::move(e));
}

int run_coe(Context& ctx, const CoeArgs& a) {
  if (a.N && a.series > 0) throw DomainError("--series applies to symbolic results only");
  if (a.N) require_positive(*a.N);
  const coe::Limits limits{a.max_n};
  ordered_json input{{"mode", a.mode}};

  if (a.mode == "joint") {
    if (a.j.empty() || a.jp.empty()) throw DomainError("coe-moment joint needs --j and --jp");
    const int bound = a.N ? static_cast<int>(*a.N) : 0;
    coe::CoeMomentSpec spec{IndexSequence::parse(a.j, bound), IndexSequence::parse(a.jp, bound), a.N};
    input["j"] = spec.j.to_string();
    input["j_prime"] = spec.j_prime.to_string();
    if (a.N) input["N"] = *a.N;
    const auto m = coe::coe_joint_moment(spec, limits);
    if (const auto* f = std::get_if<RationalFunction>(&m.value)) {
      emit_value(ctx, "coe-moment", input, symbolic(*f, m.vanishes ? 0 : a.series));
    } else {
      emit_value(ctx, "coe-moment", input, concrete(std::get<BigRational>(m.value), m.regime, *a.N));
    }
    return kOk;
  }

  if (a.mode != "diag" && a.mode != "off") throw DomainError("unknown coe-moment mode '" + a.mode + "'");
  if (a.n < 1) throw DomainError("coe-moment " + a.mode + " needs --n >= 1");
  const bool diag = a.mode == "diag";
  input["n"] = a.n;
  if (!a.N) {
    auto f = diag ? coe::coe_diag_moment_closed(a.n) : coe::coe_offdiag_moment(a.n, limits);
    emit_value(ctx, "coe-moment", input, symbolic(std::move(f), a.series));
    return kOk;
  }
  const long N = *a.N;
  input["N"] = N;
  if (!diag && N < 2) throw DomainError("an off-diagonal entry needs N >= 2");
  if (N >= 2L * a.n) {
    const auto f = diag ? coe::coe_diag_moment_closed(a.n) : coe::coe_offdiag_moment(a.n, limits);
    emit_value(ctx, "coe-moment", input, concrete(f.eval(N), wg::Regime::symbolic, N));
    return kOk;
  }
  const auto j = diag ? repeated({1, 1}, a.n) : repeated({1, 2}, a.n);
  coe::CoeMomentSpec spec{j, j, N};
  emit_value(ctx, "coe-moment", input,
             concrete(coe::coe_joint_moment_at(spec, N, limits), wg::Regime::truncated, N));
  return kOk;
}

// ---- identities --------------------------------------------------------

struct Check {
  std::string name;
  int n = 0;
  bool passed = false;
};

bool pairing_sum_holds(int n) {
  const auto r = coe::numerator_identity_check(n);
  return r.pairing_route == r.product;
}

bool numerator_types_holds(int n) {
  const auto r = coe::numerator_identity_check(n);
  return r.type_route == r.product;
}

// For i of type mu doubled, the pairings joining equal entries number
// prod (2 mu_k - 1)!!.
bool pairing_deltas_hold(int n) {
  const auto all = comb::pairings(n);
  for (const auto& mu : comb::partitions(n)) {
    const auto i = IndexSequence::canonical(mu.doubled());
    long count = 0;
    for (const auto& m : all) count += comb::pairing_delta_product(m, i);
    BigInt expected = 1;
    for (int part : mu.parts()) expected *= exact::double_factorial_odd(static_cast<unsigned>(part));
    if (BigInt(count) != expected) return false;
  }
  return true;
}

bool character_orthogonality_holds(int n) {
  const auto ps = comb::partitions(n);
  BigInt n_factorial = 1;
  for (int k = 2; k <= n; ++k) n_factorial *= k;
  for (const auto& a : ps) {
    for (const auto& b : ps) {
      BigInt rows = 0, cols = 0;
      for (const auto& c : ps) {
        rows += comb::class_size(c) * comb::irreducible_character(a, c) * comb::irreducible_character(b, c);
        cols += BigInt(comb::irreducible_character(c, a)) * comb::irreducible_character(c, b);
      }
      if (rows != (a == b ? n_factorial : BigInt(0))) return false;
      if (cols != (a == b ? a.centralizer_order() : BigInt(0))) return false;
    }
  }
  return true;
}

bool dimension_squares_hold(int n) {
  BigInt sum = 0, n_factorial = 1;
  for (int k = 2; k <= n; ++k) n_factorial *= k;
  for (const auto& lambda : comb::partitions(n)) {
    const BigInt f = comb::dimension(lambda);
    sum += f * f;
  }
  return sum == n_factorial;
}

constexpr int kMaxIdentityDegree = 6;

int run_identities(Context& ctx, int max_n) {
  if (max_n < 1) throw DomainError("--n must be at least 1");
  if (max_n > kMaxIdentityDegree)
    throw ResourceError("identities are checked up to n = " + std::to_string(kMaxIdentityDegree) + ", got " +
                        std::to_string(max_n));
  const std::vector<std::pair<std::string, std::function<bool(int)>>> suites = {
      {"pairing-sum", pairing_sum_holds},
      {"numerator-types", numerator_types_holds},
      {"pairing-deltas", pairing_deltas_hold},
      {"character-orthogonality", character_orthogonality_holds},
      {"dimension-squares", dimension_squares_hold}};
  std::vector<Check> checks;
  for (const auto& [name, holds] : suites)
    for (int n = 1; n <= max_n; ++n) checks.push_back({name, n, holds(n)});
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });

  if (ctx.globals.json) {
    ordered_json j;
    j["command"] = "identities";
    j["input"] = {{"n", max_n}};
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"n", c.n}, {"passed", c.passed}});
    j["passed"] = all;
    ctx.out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) ctx.out << (c.passed ? "PASS " : "FAIL ") << c.name << " n=" << c.n << '\n';
  }
  return all ? kOk : kVerificationFailure;
}

// ---- sample ------------------------------------------------------------

struct SampleArgs {
  std::string ensemble = "coe";
  long N = 10;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::vector<std::string> specs;
  unsigned threads = 0;
  std::optional<double> gate;
};

std::string fixed(double x, int digits = 8) {
  std::ostringstream s;
  s << std::setprecision(digits) << std::scientific << x;
  return s.str();
}

std::string complex_text(const mc::Complex& z) {
  std::ostringstream s;
  s << fixed(z.real()) << (z.imag() < 0 ? " - " : " + ") << fixed(std::abs(z.imag())) << "i";
  return s.str();
}

int run_sample(Context& ctx, const SampleArgs& a) {
  require_positive(a.N);
  if (a.specs.empty()) throw DomainError("sample needs at least one --spec");
  const auto ensemble = mc::parse_ensemble(a.ensemble);
  std::vector<mc::MomentSpec> specs;
  for (const auto& t : a.specs) specs.push_back(mc::MomentSpec::parse(ensemble, t));
  mc::EstimateOptions options;
  options.samples = a.samples;
  options.seed = a.seed;
  options.check_residuals = true;
  options.threads = a.threads;
  const auto reports = mc::estimate_moments(specs, a.N, options);

  bool gate_ok = true;
  for (const auto& r : reports)
    if (a.gate && r.z_score && *r.z_score >= *a.gate) gate_ok = false;

  if (ctx.globals.json) {
    ordered_json j;
    j["command"] = "sample";
    j["input"] = {{"ensemble", mc::to_string(ensemble)}, {"N", a.N}, {"samples", a.samples}, {"seed", a.seed}};
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json e{{"target", r.target.to_string()},
                     {"N", r.N},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"mean", {{"re", r.mean.real()}, {"im", r.mean.imag()}}},
                     {"stderr", r.stderr_}};
      e["exact"] = r.exact ? ordered_json(r.exact->get_str()) : ordered_json(nullptr);
      e["z_score"] = r.z_score ? ordered_json(*r.z_score) : ordered_json(nullptr);
      j["reports"].push_back(std::move(e));
    }
    if (a.gate) j["gate_passed"] = gate_ok;
    ctx.out << j.dump(2) << '\n';
  } else {
    std::size_t width = 6;
    for (const auto& r : reports) width = std::max(width, r.target.to_string().size());
    ctx.out << mc::to_string(ensemble) << " N=" << a.N << " samples=" << a.samples << " seed=" << a.seed << '\n';
    ctx.out << std::left << std::setw(static_cast<int>(width)) << "target" << "  " << std::setw(36) << "mean"
            << "  " << std::setw(15) << "stderr" << "  " << std::setw(15) << "exact" << "  z\n";
    for (const auto& r : reports) {
      ctx.out << std::left << std::setw(static_cast<int>(width)) << r.target.to_string() << "  " << std::setw(36)
              << complex_text(r.mean) << "  " << std::setw(15) << fixed(r.stderr_) << "  " << std::setw(15)
              << (r.exact ? fixed(r.exact->get_d()) : std::string("-")) << "  "
              << (r.z_score ? fixed(*r.z_score, 3) : std::string("-")) << '\n';
    }
  }
  return gate_ok ? kOk : kVerificationFailure;
}

// ---- trace-moments -----------------------------------------------------

int run_traces(Context& ctx, const std::string& which, std::optional<long> N) {
  std::vector<coe::TraceMoment> targets;
  if (which == "all") {
    targets = {coe::TraceMoment::tr4, coe::TraceMoment::tr2sq, coe::TraceMoment::mixed};
  } else {
    targets = {coe::parse_trace_moment(which)};
  }
  if (N) require_positive(*N);
  std::vector<std::pair<coe::TraceMoment, Value>> values;
  for (auto t : targets) {
    const auto f = coe::coe_trace_moments_degree2(t);
    // Built from entry moments that hold as functions of N for N >= 4.
    if (N && *N < 4) {
      const long n = *N;
      const auto entry = [&](std::vector<int> j, std::vector<int> jp) {
        return coe::coe_joint_moment_at({IndexSequence(std::move(j)), IndexSequence(std::move(jp)), n}, n);
      };
      BigRational q;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d) {
              switch (t) {
                case coe::TraceMoment::tr4:
                  q += entry({a, a, b, b}, {c, c, d, d});
                  break;
                case coe::TraceMoment::tr2sq:
                  q += entry({a, b, b, a}, {c, d, d, c});
                  break;
                case coe::TraceMoment::mixed:
                  q += entry({a, b, b, a}, {c, c, d, d});
                  break;
              }
            }
      values.emplace_back(t, concrete(q, wg::Regime::truncated, n));
    } else if (N) {
      values.emplace_back(t, concrete(f.eval(*N), wg::Regime::symbolic, *N));
    } else {
      values.emplace_back(t, symbolic(f, 0));
    }
  }
  if (ctx.globals.json) {
    ordered_json j;
    j["command"] = "trace-moments";
    j["input"] = {{"which", which}};
    if (N) j["input"]["N"] = *N;
    j["results"] = ordered_json::array();
    for (const auto& [t, v] : values) {
      ordered_json e{{"name", coe::to_string(t)}};
      v.write_json(e);
      j["results"].push_back(std::move(e));
    }
    ctx.out << j.dump(2) << '\n';
  } else {
    for (const auto& [t, v] : values) ctx.out << coe::to_string(t) << " = " << v.text() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weingarten calculus for CUE and COE moments", "wgcoe"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Emit JSON instead of text");
  app.add_option("--cache-dir", globals.cache_dir, "Cache directory (overrides $WGCOE_CACHE_DIR)");

  WgArgs wg_args;
  auto* wg = app.add_subcommand("wg", "Weingarten function on a conjugacy class");
  wg->add_option("--n", wg_args.n, "Degree n (defaults to the size of the cycle type)");
  wg->add_option("--cycle-type", wg_args.cycle_type, "Cycle type, e.g. 2,1,1");
  wg->add_option("--permutation", wg_args.permutation, "Permutation in cycle notation, e.g. \"(1 2)(3 4)\"");
  auto* wg_N = wg->add_option("--N", wg_args.N, "Evaluate at this N");
  wg->add_flag("--symbolic", wg_args.symbolic, "Rational function of N (default)")->excludes(wg_N);
  wg->add_option("--series", wg_args.series, "Append K terms of the large-N expansion");

  CueArgs cue_args;
  auto* cue = app.add_subcommand("cue-moment", "Joint moment of Haar unitary entries");
  cue->add_option("--i", cue_args.i, "Row indices of the plain factors")->required();
  cue->add_option("--j", cue_args.j, "Column indices of the plain factors")->required();
  cue->add_option("--ip", cue_args.ip, "Row indices of the conjugated factors")->required();
  cue->add_option("--jp", cue_args.jp, "Column indices of the conjugated factors")->required();
  auto* cue_N = cue->add_option("--N", cue_args.N, "Evaluate at this N");
  cue->add_flag("--symbolic", cue_args.symbolic, "Rational function of N (default)")->excludes(cue_N);
  cue->add_option("--series", cue_args.series, "Append K terms of the large-N expansion");
  cue->add_option("--max-degree", cue_args.max_degree, "Largest degree accepted")->capture_default_str();

  CoeArgs coe_args;
  auto* coe = app.add_subcommand("coe-moment", "Moments of COE entries");
  coe->add_option("mode", coe_args.mode, "diag, off or joint")->required()->check(CLI::IsMember({"diag", "off", "joint"}));
  coe->add_option("--n", coe_args.n, "Power n in E|v|^{2n}");
  coe->add_option("--j", coe_args.j, "Index pairs of the plain factors, e.g. 1,2,1,2");
  coe->add_option("--jp", coe_args.jp, "Index pairs of the conjugated factors");
  auto* coe_N = coe->add_option("--N", coe_args.N, "Evaluate at this N");
  coe->add_flag("--symbolic", coe_args.symbolic, "Rational function of N (default)")->excludes(coe_N);
  coe->add_option("--series", coe_args.series, "Append K terms of the large-N expansion");
  coe->add_option("--max-n", coe_args.max_n, "Largest number of factors accepted by the joint engine")
      ->capture_default_str();

  int identities_n = kMaxIdentityDegree;
  auto* identities = app.add_subcommand("identities", "Run the combinatorial identity checks");
  identities->add_option("--n", identities_n, "Check all degrees up to n")->capture_default_str();

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates with exact references");
  sample->add_option("--ensemble", sample_args.ensemble, "cue, coe or orthogonal")->capture_default_str();
  sample->add_option("--N", sample_args.N, "Matrix size")->capture_default_str();
  sample->add_option("--samples", sample_args.samples, "Number of samples")->capture_default_str();
  sample->add_option("--seed", sample_args.seed, "Seed")->capture_default_str();
  sample->add_option("--spec", sample_args.specs, "Monomial \"r:c,...|r:c,...\" or tr4/tr2sq/mixed (repeatable)")
      ->required();
  sample->add_option("--threads", sample_args.threads, "Worker threads (0: all cores)");
  sample->add_option("--gate", sample_args.gate, "Exit 3 when any z-score reaches this value");

  std::string trace_which = "all";
  std::optional<long> trace_N;
  auto* traces = app.add_subcommand("trace-moments", "Degree-two COE trace moments");
  traces->add_option("which", trace_which, "tr4, tr2sq, mixed or all")->capture_default_str();
  traces->add_option("--N", trace_N, "Evaluate at this N");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  std::optional<std::string> flag;
  if (!globals.cache_dir.empty()) flag = globals.cache_dir;
  cache::Cache store(cache::resolve_directory(flag));
  const auto loaded = store.load();
  if (loaded.ignored) err << "warning: ignoring cache file (" << loaded.reason << ")\n";

  Context ctx{out, globals};
  int code = kOk;
  try {
    if (wg->parsed()) code = run_wg(ctx, wg_args);
    else if (cue->parsed()) code = run_cue(ctx, cue_args);
    else if (coe->parsed()) code = run_coe(ctx, coe_args);
    else if (identities->parsed()) code = run_identities(ctx, identities_n);
    else if (sample->parsed()) code = run_sample(ctx, sample_args);
    else if (traces->parsed()) code = run_traces(ctx, trace_which, trace_N);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  if (!sample->parsed()) store.store(err);
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace wgcoe::cli
