// curvecount: self-intersection statistics of curves on surfaces with boundary.
//
// Exit codes: 0 success, 1 usage or input error, 2 exhaustive work refused
// beyond the desk limit, 3 computation error.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvecount/clt.hpp"
#include "curvecount/errors.hpp"
#include "curvecount/intersection.hpp"
#include "curvecount/markov.hpp"
#include "curvecount/moments.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

#ifndef CURVECOUNT_VERSION
#define CURVECOUNT_VERSION "0.0.0"
#endif

namespace cc = curvecount;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitComputation = 3;

struct Globals {
  std::string notation = "upper";
  unsigned threads = 0;
  bool timestamp = false;

  cc::Notation parsed_notation() const {
    return notation == "prime" ? cc::Notation::kPrime : cc::Notation::kUppercase;
  }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw cc::InputError("cannot read surface file '" + p.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Preset name, path, or a file in $CURVECOUNT_SURFACE_DIR.
cc::Surface resolve_surface(const std::string& arg, cc::Notation notation) {
  if (cc::is_preset(arg)) return cc::preset_surface(arg);
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates{arg};
  if (const char* dir = std::getenv("CURVECOUNT_SURFACE_DIR")) {
    candidates.emplace_back(fs::path(dir) / arg);
    candidates.emplace_back(fs::path(dir) / (arg + ".surface"));
  }
  for (const auto& p : candidates) {
    if (fs::is_regular_file(p)) {
      return cc::parse_surface_description(read_file(p), notation, p.stem().string());
    }
  }
  std::string names;
  for (const auto& n : cc::preset_names()) names += (names.empty() ? "" : ", ") + n;
  throw cc::InputError("surface '" + arg + "' is neither a preset (" + names + ") nor a readable file");
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

ordered_json rational_json(const cc::Rational& q) {
  return ordered_json{{"fraction", cc::fraction_string(q)}, {"decimal", cc::decimal_string(cc::to_double(q))}};
}

ordered_json manifest(const Globals& globals, const std::string& subcommand, const cc::Surface& surface,
                      ordered_json flags, ordered_json seeds = nullptr) {
  ordered_json m;
  m["tool"] = "curvecount";
  m["version"] = CURVECOUNT_VERSION;
  m["subcommand"] = subcommand;
  m["surface"] = surface.id().empty() ? surface.describe() : surface.id();
  m["surface_hash"] = hex64(cc::surface_hash(surface));
  m["flags"] = std::move(flags);
  m["seeds"] = std::move(seeds);
  if (globals.timestamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    m["timestamp"] = buf;
  } else {
    m["timestamp"] = nullptr;
  }
  return m;
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cc::InputError("cannot write '" + out_path + "'");
  out << text;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw cc::InputError("bad entry in --n-list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw cc::InputError("--n-list is empty");
  return out;
}

std::string kind_name(cc::KernelKind k) { return k == cc::KernelKind::kU ? "u" : "v"; }

ordered_json histogram_json(const cc::Histogram& h) {
  ordered_json bins = ordered_json::array();
  for (auto [v, c] : h.bins) bins.push_back({{"value", v}, {"count", c}});
  ordered_json j;
  j["n"] = h.n;
  j["mode"] = h.mode == cc::HistogramMode::kExhaustive ? "exhaustive" : "montecarlo";
  j["total"] = h.total;
  j["excluded_nonprimitive"] = h.excluded_nonprimitive;
  j["bins"] = std::move(bins);
  return j;
}

void write_histogram_csv(const cc::Histogram& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw cc::InputError("cannot write '" + path + "'");
  out << "value,count\n";
  for (auto [v, c] : h.bins) out << v << ',' << c << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact self-intersection counts and their Gaussian limit for curves on surfaces with boundary"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--notation", globals.notation, "Inverse notation: upper (A = inverse of a) or prime (a')")
      ->check(CLI::IsMember({"upper", "prime"}));
  app.add_option("--threads", globals.threads, "Worker threads (0 = all cores); results do not depend on it");
  app.add_flag("--timestamp", globals.timestamp, "Record the wall-clock time in JSON manifests");

  std::string surface_arg;
  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", surface_arg, "Preset name or surface description file")->required();
  };

  // surface analyze
  auto* surface_cmd = app.add_subcommand("surface", "Surface utilities");
  surface_cmd->require_subcommand(1);
  auto* analyze_cmd = surface_cmd->add_subcommand("analyze", "Glue the polygon and report its topology");
  add_surface(analyze_cmd);

  // count
  auto* count_cmd = app.add_subcommand("count", "CSV table of |S_n|, |J_n|, |F_n| for n = 1..N");
  add_surface(count_cmd);
  std::size_t count_n = 0;
  bool count_no_enum = false;
  count_cmd->add_option("--n", count_n, "Largest length")->required()->check(CLI::PositiveNumber);
  count_cmd->add_flag("--no-enumerate", count_no_enum, "Skip enumeration (necklace columns left empty)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "List all words of a given length");
  add_surface(enum_cmd);
  std::size_t enum_n = 0;
  std::string enum_kind = "necklaces";
  bool enum_force = false, enum_compact = false;
  enum_cmd->add_option("--n", enum_n, "Length")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--kind", enum_kind, "strings, joinable or necklaces")
      ->check(CLI::IsMember({"strings", "joinable", "necklaces"}));
  enum_cmd->add_flag("--force", enum_force, "Allow sizes beyond the desk limit");
  enum_cmd->add_flag("--compact", enum_compact, "Print words without separating spaces");

  // selfint
  auto* selfint_cmd = app.add_subcommand("selfint", "Self-intersection number of a cyclic word");
  add_surface(selfint_cmd);
  std::string word_arg;
  bool witnesses = false, force_nonprimitive = false;
  std::size_t selfint_max_k = 0;
  selfint_cmd->add_option("--word", word_arg, "Joinable word, e.g. \"a b C a\"")->required();
  selfint_cmd->add_flag("--witnesses", witnesses, "Also print the contributing (i,j,k,kind) terms as CSV");
  selfint_cmd->add_flag("--force-nonprimitive", force_nonprimitive,
                        "Evaluate the formula on a proper power (result is not a self-intersection number)");
  selfint_cmd->add_option("--max-k", selfint_max_k, "Truncate the kernel sum at k (0 = none)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw random words");
  add_surface(sample_cmd);
  std::size_t sample_n = 0, sample_count = 1;
  std::string sample_mode = "joinable";
  std::uint64_t sample_seed = 0;
  bool sample_compact = false;
  sample_cmd->add_option("--n", sample_n, "Length")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--count", sample_count, "Number of words");
  sample_cmd->add_option("--mode", sample_mode, "string, joinable, necklace-approx or necklace-exact")
      ->check(CLI::IsMember({"string", "joinable", "necklace-approx", "necklace-exact"}));
  sample_cmd->add_option("--seed", sample_seed, "RNG seed");
  sample_cmd->add_flag("--compact", sample_compact, "Print words without separating spaces");

  // mixing
  auto* mixing_cmd = app.add_subcommand("mixing", "CSV of max |p_m(a,b) - 1/g| against theta^m");
  add_surface(mixing_cmd);
  unsigned m_max = 20;
  mixing_cmd->add_option("--m-max", m_max, "Largest step count");

  // tvbound
  auto* tv_cmd = app.add_subcommand("tvbound", "Exact prefix total variation vs its bound");
  add_surface(tv_cmd);
  std::size_t tv_n = 0, tv_m = 0;
  bool tv_force = false;
  tv_cmd->add_option("--n", tv_n, "Word length")->required();
  tv_cmd->add_option("--m", tv_m, "Number of trailing letters dropped")->required();
  tv_cmd->add_flag("--force", tv_force, "Allow sizes beyond the desk limit");

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "Exact limit constants kappa and sigma^2");
  add_surface(moments_cmd);
  std::size_t moments_k = 50;
  moments_cmd->add_option("--K", moments_k, "Length of the S_K and variance tables")->check(CLI::Range(3, 1000));

  // clt
  auto* clt_cmd = app.add_subcommand("clt", "Distribution of N: exhaustive or Monte Carlo");
  add_surface(clt_cmd);
  std::size_t clt_n = 0, clt_samples = 10000, clt_max_k = 0;
  std::uint64_t clt_seed = 0;
  bool clt_exhaustive = false, clt_force = false;
  std::string clt_out, clt_hist;
  double clt_zwidth = 0.25;
  cc::CltThresholds thresholds;
  clt_cmd->add_option("--n", clt_n, "Word length")->required()->check(CLI::Range(2, 1 << 20));
  clt_cmd->add_option("--samples", clt_samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  clt_cmd->add_option("--seed", clt_seed, "RNG seed");
  clt_cmd->add_flag("--exhaustive", clt_exhaustive, "Enumerate all primitive necklaces instead of sampling");
  clt_cmd->add_flag("--force", clt_force, "Allow exhaustive sizes beyond the desk limit");
  clt_cmd->add_option("--out", clt_out, "Write the JSON report here instead of stdout");
  clt_cmd->add_option("--histogram", clt_hist, "Write the value,count histogram CSV here");
  clt_cmd->add_option("--max-k", clt_max_k, "Truncate the kernel sum at k (0 = none)");
  clt_cmd->add_option("--z-bin-width", clt_zwidth, "Width of standardized histogram bins");
  clt_cmd->add_option("--mean-se", thresholds.mean_standard_errors, "Mean threshold in standard errors");
  clt_cmd->add_option("--var-tol", thresholds.variance_tolerance, "Tolerance on |var_z - 1|");
  clt_cmd->add_option("--ks-max", thresholds.ks_max, "Largest acceptable KS distance");

  // trend
  auto* trend_cmd = app.add_subcommand("trend", "Monte Carlo convergence table over several n");
  add_surface(trend_cmd);
  std::string n_list = "25,50,100,200";
  std::size_t trend_samples = 2000;
  std::uint64_t trend_seed = 0;
  trend_cmd->add_option("--n-list", n_list, "Comma-separated ascending lengths");
  trend_cmd->add_option("--samples", trend_samples, "Samples per length")->check(CLI::PositiveNumber);
  trend_cmd->add_option("--seed", trend_seed, "Base seed; length n uses seed + n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << " (see --help)\n";
    return kExitUsage;
  }

  const cc::Notation notation = globals.parsed_notation();

  try {
    const cc::Surface surface = resolve_surface(surface_arg, notation);

    if (*analyze_cmd) {
      const auto r = cc::analyze_gluing(surface);
      ordered_json j;
      j["manifest"] = manifest(globals, "surface analyze", surface, ordered_json::object());
      j["g"] = surface.size();
      j["reference_word"] = surface.format_letters(surface.reference(), notation);
      j["vertices"] = r.vertices;
      j["edges"] = r.edges;
      j["faces"] = r.faces;
      j["euler_characteristic"] = r.euler_characteristic;
      j["boundary_components"] = r.boundary_components;
      j["genus"] = r.genus;
      j["orientable"] = r.orientable;
      emit_json(j, "");
      return kExitOk;
    }

    if (*count_cmd) {
      std::cout << "n,strings,joinable,necklaces,primitive_necklaces\n";
      for (std::size_t n = 1; n <= count_n; ++n) {
        const cc::BigInt strings = cc::count_strings(surface, n);
        const cc::BigInt joinable = cc::count_joinable(surface, n);
        if (strings != cc::count_strings_closed_form(surface.size(), n)) {
          throw std::logic_error("matrix count disagrees with g(g-1)^(n-1)");
        }
        std::cout << n << ',' << strings << ',' << joinable << ',';
        if (!count_no_enum && cc::within_desk_limit(surface, n)) {
          const auto c = cc::count_necklaces(surface, n);
          if (cc::BigInt(c.joinable) != joinable) {
            throw std::logic_error("enumerated |J_n| disagrees with trace((B-A)^n)");
          }
          std::cout << c.necklaces << ',' << c.primitive;
        } else {
          std::cout << ',';
        }
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (*enum_cmd) {
      cc::require_feasible(surface, enum_n, enum_force);
      auto print = [&](std::span<const cc::Letter> w) {
        std::cout << surface.format_letters(w, notation, enum_compact) << '\n';
        return true;
      };
      if (enum_kind == "strings") {
        cc::for_each_string(surface, enum_n, print);
      } else if (enum_kind == "joinable") {
        cc::for_each_joinable(surface, enum_n, print);
      } else {
        cc::for_each_necklace(surface, enum_n, [&](std::span<const cc::Letter> w, std::size_t) { return print(w); });
      }
      return kExitOk;
    }

    if (*selfint_cmd) {
      const cc::JoinableWord w(surface, surface.parse_letters(word_arg));
      cc::IntersectionOptions opt;
      opt.record_witnesses = witnesses;
      opt.allow_nonprimitive = force_nonprimitive;
      opt.max_k = selfint_max_k;
      if (force_nonprimitive && cc::rotation_period(w.letters()) != w.size()) {
        std::cerr << "warning: word is a proper power; printing the formula value, not a self-intersection number\n";
      }
      const auto r = cc::self_intersection(surface, w, opt);
      std::cout << r.total << '\n';
      if (witnesses) {
        std::cout << "i,j,k,kind\n";
        for (const auto& x : r.witnesses) std::cout << x.i << ',' << x.j << ',' << x.k << ',' << kind_name(x.kind) << '\n';
      }
      return kExitOk;
    }

    if (*sample_cmd) {
      const auto mode = cc::parse_sample_mode(sample_mode);
      if (mode != cc::SampleMode::kString && sample_n < 2) {
        throw cc::InputError("joinable and necklace samples need --n >= 2");
      }
      for (std::size_t s = 0; s < sample_count; ++s) {
        cc::StreamRng rng(sample_seed, s);
        std::vector<cc::Letter> w;
        switch (mode) {
          case cc::SampleMode::kString: w = cc::sample_string(surface, sample_n, rng); break;
          case cc::SampleMode::kJoinable: w = cc::sample_joinable(surface, sample_n, rng); break;
          default: {
            const auto nk = cc::sample_necklace(surface, sample_n, rng, mode);
            const auto l = nk.canonical().letters();
            w.assign(l.begin(), l.end());
          }
        }
        std::cout << surface.format_letters(w, notation, sample_compact) << '\n';
      }
      return kExitOk;
    }

    if (*mixing_cmd) {
      const cc::MarkovModel model(surface);
      std::cout << "m,max_deviation,theta_m,max_deviation_decimal,theta_m_decimal\n";
      for (unsigned m = 0; m <= m_max; ++m) {
        const cc::Rational dev = model.max_deviation(m);
        const cc::Rational th = cc::rational_pow(model.theta(), m);
        std::cout << m << ',' << cc::fraction_string(dev) << ',' << cc::fraction_string(th) << ','
                  << cc::decimal_string(cc::to_double(dev)) << ',' << cc::decimal_string(cc::to_double(th)) << '\n';
      }
      return kExitOk;
    }

    if (*tv_cmd) {
      const auto r = cc::tv_prefix_bound(surface, tv_n, tv_m, tv_force);
      ordered_json j;
      j["manifest"] = manifest(globals, "tvbound", surface, {{"n", tv_n}, {"m", tv_m}});
      j["g"] = r.g;
      j["n"] = r.n;
      j["m"] = r.m;
      j["exact_tv"] = rational_json(r.exact_tv);
      j["bound"] = r.bound ? rational_json(*r.bound) : ordered_json(nullptr);
      j["vacuous"] = !r.bound.has_value();
      j["holds"] = r.holds();
      emit_json(j, "");
      return kExitOk;
    }

    if (*moments_cmd) {
      const auto r = cc::limit_constants(surface, moments_k);
      ordered_json j;
      j["manifest"] = manifest(globals, "moments", surface, {{"K", moments_k}});
      j["g"] = r.g;
      j["chi"] = r.chi;
      j["kappa"] = rational_json(r.kappa);
      j["kappa_g_form"] = rational_json(r.kappa_g_form);
      j["mean_S_infinity"] = rational_json(r.mean_s_infinity);
      j["mean_U2"] = rational_json(r.mean_u2);
      j["sigma2"] = rational_json(r.sigma2);
      j["sigma2_g_form"] = rational_json(r.sigma2_g_form);
      j["sigma2_series"] = rational_json(r.sigma2_series);
      j["var_U2"] = rational_json(r.var_u2);
      j["var_tail"] = rational_json(r.var_tail);
      const auto gm = cc::gap_moments(r.g);
      j["gap_moments"] = {{"EJ", rational_json(gm.mean)},
                          {"EJ2", rational_json(gm.second)},
                          {"EJ3", rational_json(gm.third)},
                          {"EJ4", rational_json(gm.fourth)},
                          {"EJJ'", rational_json(gm.cross)}};
      ordered_json sk = ordered_json::array();
      for (const auto& [k, v] : r.mean_s_k) sk.push_back({{"K", k}, {"mean", rational_json(v)}});
      j["S_K"] = std::move(sk);
      ordered_json vt = ordered_json::array();
      for (const auto& [k, v] : r.variance_terms) vt.push_back({{"k", k}, {"var_U", rational_json(v)}});
      j["variance_terms"] = std::move(vt);
      emit_json(j, "");
      return kExitOk;
    }

    if (*clt_cmd) {
      ordered_json flags{{"n", clt_n}, {"exhaustive", clt_exhaustive}, {"max_k", clt_max_k}};
      if (clt_exhaustive) {
        const auto h = cc::exhaustive_distribution(surface, clt_n, clt_force, globals.threads);
        const auto moments = cc::limit_constants(surface, 3);
        const double nn = static_cast<double>(clt_n);
        ordered_json j;
        j["manifest"] = manifest(globals, "clt", surface, flags);
        j["n"] = clt_n;
        j["mode"] = "exhaustive";
        j["population"] = h.total;
        j["excluded_nonprimitive"] = h.excluded_nonprimitive;
        j["kappa"] = rational_json(moments.kappa);
        j["sigma2"] = rational_json(moments.sigma2);
        j["mean"] = rational_json(h.exact_mean());
        j["variance"] = cc::decimal_string(h.variance());
        j["mean_over_n2"] = cc::decimal_string(h.mean() / (nn * nn));
        j["var_over_n3"] = cc::decimal_string(h.variance() / (nn * nn * nn));
        j["histogram"] = histogram_json(h);
        emit_json(j, clt_out);
        if (!clt_hist.empty()) write_histogram_csv(h, clt_hist);
        return kExitOk;
      }
      cc::CltConfig cfg;
      cfg.seed = clt_seed;
      cfg.samples = clt_samples;
      cfg.threads = globals.threads;
      cfg.max_k = clt_max_k;
      cfg.z_bin_width = clt_zwidth;
      cfg.thresholds = thresholds;
      const auto [h, r] = cc::montecarlo_distribution(surface, clt_n, cfg);
      flags["samples"] = clt_samples;
      flags["z_bin_width"] = clt_zwidth;
      ordered_json j;
      j["manifest"] = manifest(globals, "clt", surface, flags, {{"seed", clt_seed}, {"rng", r.rng}});
      j["n"] = r.n;
      j["mode"] = "montecarlo";
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["rng"] = r.rng;
      j["kappa"] = rational_json(r.kappa);
      j["sigma2"] = rational_json(r.sigma2);
      j["sample_mean"] = cc::decimal_string(r.sample_mean);
      j["sample_variance"] = cc::decimal_string(r.sample_variance);
      j["mean_z"] = cc::decimal_string(r.mean_z);
      j["var_z"] = cc::decimal_string(r.var_z);
      j["std_z"] = cc::decimal_string(r.std_z);
      j["ks_distance"] = cc::decimal_string(r.ks_distance);
      j["nonprimitive_redraws"] = r.nonprimitive_redraws;
      j["thresholds"] = {{"mean_standard_errors", r.thresholds.mean_standard_errors},
                         {"variance_tolerance", r.thresholds.variance_tolerance},
                         {"ks_max", r.thresholds.ks_max}};
      j["checks"] = {{"mean", {{"bound", cc::decimal_string(r.mean_bound())}, {"pass", r.mean_ok()}}},
                     {"variance", {{"pass", r.variance_ok()}}},
                     {"ks", {{"pass", r.ks_ok()}}}};
      ordered_json zb = ordered_json::array();
      for (auto [b, c] : r.z_bins) {
        zb.push_back({{"lower", cc::decimal_string(static_cast<double>(b) * r.z_bin_width)}, {"count", c}});
      }
      j["z_histogram"] = {{"width", r.z_bin_width}, {"bins", std::move(zb)}};
      j["histogram"] = histogram_json(h);
      emit_json(j, clt_out);
      if (!clt_hist.empty()) write_histogram_csv(h, clt_hist);
      return kExitOk;
    }

    if (*trend_cmd) {
      const auto ns = parse_n_list(n_list);
      cc::CltConfig cfg;
      cfg.seed = trend_seed;
      cfg.samples = trend_samples;
      cfg.threads = globals.threads;
      const auto rows = cc::trend_report(surface, ns, cfg);
      std::cout << "n,seed,mean_over_n2,mean_deviation,var_over_n3,var_deviation,ks_distance\n";
      for (const auto& r : rows) {
        std::cout << r.n << ',' << r.seed << ',' << cc::decimal_string(r.mean_over_n2) << ','
                  << cc::decimal_string(r.mean_deviation) << ',' << cc::decimal_string(r.var_over_n3) << ','
                  << cc::decimal_string(r.var_deviation) << ',' << cc::decimal_string(r.ks_distance) << '\n';
      }
      return kExitOk;
    }
  } catch (const cc::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const cc::NonPrimitiveError& e) {
    std::cerr << "error: " << e.what() << " (use --force-nonprimitive to evaluate anyway)\n";
    return kExitComputation;
  } catch (const cc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
