#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levi/bench.hpp"
#include "levi/enumerate.hpp"
#include "levi/identities.hpp"

namespace levi::cli {

namespace {

using nlohmann::json;

struct GeneratorOptions {
  std::string generator = "identity";
  int order = 2;
  double lambda = 1.0;
  double lambda_imag = 0.0;
  std::string preset;
  bool random_lambda = false;
};

void add_generator_flags(CLI::App* cmd, GeneratorOptions& opts) {
  cmd->add_option("--generator", opts.generator,
                  "generator for the generalized backend: identity, cosine, bessel-j0, "
                  "gamma-shifted, hermite, laguerre, gegenbauer1, chebyshev, legendre");
  cmd->add_option("--order", opts.order, "polynomial generator order (>= 1)");
  cmd->add_option("--lambda", opts.lambda, "generator parameter (real part)");
  cmd->add_option("--lambda-imag", opts.lambda_imag, "generator parameter (imaginary part)");
  cmd->add_option("--preset", opts.preset,
                  "named parameter preset: cos-half-pi, cos-quarter-pi, bessel-z1, "
                  "gamma-unit, laguerre2-zero");
  cmd->add_flag("--random-lambda", opts.random_lambda,
                "draw a random complex lambda (seeded with --seed) until the generator "
                "is injective");
}

GeneratorSpec build_generator(const GeneratorOptions& opts, int n, std::uint64_t seed) {
  if (!opts.preset.empty()) return preset_generator(opts.preset);

  GeneratorKind kind;
  std::optional<PolynomialFamily> family;
  if (opts.generator == "identity") {
    kind = GeneratorKind::identity;
  } else if (opts.generator == "cosine") {
    kind = GeneratorKind::cosine;
  } else if (opts.generator == "bessel-j0") {
    kind = GeneratorKind::bessel_j0;
  } else if (opts.generator == "gamma-shifted") {
    kind = GeneratorKind::gamma_shifted;
  } else {
    static const std::map<std::string, PolynomialKind> families = {
        {"hermite", PolynomialKind::hermite},
        {"laguerre", PolynomialKind::laguerre},
        {"gegenbauer1", PolynomialKind::gegenbauer1},
        {"chebyshev", PolynomialKind::chebyshev},
        {"legendre", PolynomialKind::legendre},
    };
    const auto it = families.find(opts.generator);
    if (it == families.end()) {
      throw std::domain_error("unknown generator: " + opts.generator);
    }
    kind = GeneratorKind::polynomial;
    family = make_polynomial_family(it->second, opts.order);
  }

  if (opts.random_lambda) return random_lambda_generator(kind, n, seed, family);
  return GeneratorSpec::make(kind, {opts.lambda, opts.lambda_imag}, family);
}

BackendId build_backend(const std::string& name, const GeneratorOptions& opts, int n,
                        std::uint64_t seed) {
  if (name == "generalized") {
    return BackendId::generalized(build_generator(opts, n, seed));
  }
  if (auto id = BackendId::parse(name)) return *id;
  throw std::domain_error("unknown backend: " + name);
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse index '" + item + "' in \"" + text + "\"");
    }
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("LEVI_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

json report_to_json(const EnumerationReport& report) {
  return json{{"backend", report.backend.name()},
              {"n", report.n},
              {"plus", report.count_plus},
              {"minus", report.count_minus},
              {"zero", report.count_zero},
              {"disagreements", report.disagreements.size()}};
}

void print_indices(std::ostream& out, std::span<const int> idx, char sep) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << sep;
    out << idx[i];
  }
}

int run_eval(int n, const std::string& indices_text, const std::string& backend_name,
             const GeneratorOptions& gopts, std::uint64_t seed, const std::string& format,
             std::ostream& out) {
  const std::vector<int> raw = parse_indices(indices_text);
  const MultiIndex idx(n, raw);
  const BackendId backend = build_backend(backend_name, gopts, n, seed);
  const BackendEvaluator evaluate(backend, n);
  const Sign sign = evaluate(idx);

  if (format == "jsonl") {
    out << json{{"n", n},
                {"indices", raw},
                {"backend", backend.name()},
                {"sign", to_int(sign)}}
               .dump()
        << '\n';
  } else if (format == "csv") {
    for (int i = 1; i <= n; ++i) out << 'i' << i << ',';
    out << "backend,sign\n";
    print_indices(out, idx.values(), ',');
    out << ',' << backend.name() << ',' << to_int(sign) << '\n';
  } else {
    out << to_string(sign) << '\n';
  }
  return 0;
}

int run_enumerate(int n, const std::string& backend_name, const GeneratorOptions& gopts,
                  std::uint64_t seed, bool nonzero_only, const std::string& format, int jobs,
                  std::ostream& out, std::ostream& err) {
  const BackendId backend = build_backend(backend_name, gopts, n, seed);

  NonzeroSink sink;
  if (nonzero_only) {
    if (format == "csv") {
      for (int i = 1; i <= n; ++i) out << 'i' << i << ',';
      out << "sign\n";
    }
    sink = [&](std::span<const int> t, Sign s) {
      if (format == "jsonl") {
        out << json{{"indices", std::vector<int>(t.begin(), t.end())}, {"sign", to_int(s)}}
                   .dump()
            << '\n';
      } else if (format == "csv") {
        print_indices(out, t, ',');
        out << ',' << to_int(s) << '\n';
      } else {
        print_indices(out, t, ',');
        out << ' ' << to_string(s) << '\n';
      }
    };
  }

  const EnumerationReport report = enumerate_all(n, backend, nonzero_only, sink, jobs);

  std::ostringstream summary;
  summary << "n=" << report.n << " backend=" << report.backend.name()
          << " plus=" << report.count_plus << " minus=" << report.count_minus
          << " zero=" << report.count_zero << " total=" << report.total();
  if (nonzero_only) {
    err << summary.str() << '\n';
  } else if (format == "jsonl") {
    out << report_to_json(report).dump() << '\n';
  } else if (format == "csv") {
    out << "backend,n,plus,minus,zero\n"
        << report.backend.name() << ',' << report.n << ',' << report.count_plus << ','
        << report.count_minus << ',' << report.count_zero << '\n';
  } else {
    out << summary.str() << '\n';
  }
  return 0;
}

int run_verify(int n, const std::string& backends_text, const GeneratorOptions& gopts,
               std::uint64_t seed, const std::string& format, int jobs, std::ostream& out,
               std::ostream& err) {
  std::vector<BackendId> backends;
  if (backends_text == "all") {
    backends = all_backends_for(n);
  } else {
    std::stringstream ss(backends_text);
    std::string name;
    while (std::getline(ss, name, ',')) {
      backends.push_back(build_backend(name, gopts, n, seed));
    }
  }
  if (backends.empty()) throw std::domain_error("no backends selected");

  if (format == "csv") out << "backend,n,plus,minus,zero,disagreements\n";

  bool failed = false;
  for (const auto& backend : backends) {
    const EnumerationReport report = verify_backend(n, backend, jobs);
    if (!report.disagreements.empty()) failed = true;

    if (format == "jsonl") {
      out << report_to_json(report).dump() << '\n';
    } else if (format == "csv") {
      out << report.backend.name() << ',' << report.n << ',' << report.count_plus << ','
          << report.count_minus << ',' << report.count_zero << ','
          << report.disagreements.size() << '\n';
    } else {
      out << (report.disagreements.empty() ? "ok   " : "FAIL ") << report.backend.name()
          << " (plus=" << report.count_plus << " minus=" << report.count_minus
          << " zero=" << report.count_zero << " disagreements=" << report.disagreements.size()
          << ")\n";
    }

    std::size_t shown = 0;
    for (const auto& d : report.disagreements) {
      if (++shown > 10) {
        err << "  ... " << report.disagreements.size() - 10 << " more\n";
        break;
      }
      err << "  disagreement at (";
      print_indices(err, d.indices, ',');
      err << "): got " << to_string(d.got) << ", oracle says " << to_string(d.expected) << '\n';
    }
  }
  return failed ? 2 : 0;
}

int run_identities(std::uint64_t seed, int cases, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  struct Suite {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
  };
  std::vector<Suite> suites;

  {
    Suite s{"eps2-delta-vs-oracle"};
    Suite c{"eps2-closed-vs-delta"};
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int m = 1; m <= 2; ++m)
          for (int n = 1; n <= 2; ++n) {
            const int expected = to_int(epsilon_oracle(std::vector<int>{i, j})) *
                                 to_int(epsilon_oracle(std::vector<int>{m, n}));
            const int delta = eps2_product_delta(i, j, m, n);
            ++s.checks;
            if (delta != expected) ++s.failures;
            ++c.checks;
            if (eps2_product_closed(i, j, m, n) != delta) ++c.failures;
          }
    suites.push_back(s);
    suites.push_back(c);
  }
  {
    Suite s{"eps3-delta-vs-oracle"};
    Suite c{"eps3-closed-vs-delta"};
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          for (int l = 1; l <= 3; ++l)
            for (int m = 1; m <= 3; ++m)
              for (int n = 1; n <= 3; ++n) {
                const int expected = to_int(epsilon_oracle(std::vector<int>{i, j, k})) *
                                     to_int(epsilon_oracle(std::vector<int>{l, m, n}));
                const int delta = eps3_product_delta(i, j, k, l, m, n);
                ++s.checks;
                if (delta != expected) ++s.failures;
                ++c.checks;
                if (eps3_product_closed(i, j, k, l, m, n) != delta) ++c.failures;
              }
    suites.push_back(s);
    suites.push_back(c);
  }
  {
    Suite s{"det-expansion-vs-elimination"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    const std::vector<BackendId> backends = {BackendId::oracle(), BackendId::rational_product(),
                                             BackendId::closed_form_low_dim()};
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < cases; ++trial) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (auto& v : e) v = entry(rng);
        const SquareMatrix m(n, std::move(e));
        const std::int64_t reference = determinant_elimination(m);
        for (const auto& backend : backends) {
          ++s.checks;
          if (det_via_epsilon(m, backend) != reference) ++s.failures;
        }
      }
    }
    suites.push_back(s);
  }

  bool failed = false;
  if (format == "csv") out << "suite,checks,failures\n";
  for (const auto& s : suites) {
    if (s.failures > 0) failed = true;
    if (format == "jsonl") {
      out << json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}}.dump()
          << '\n';
    } else if (format == "csv") {
      out << s.name << ',' << s.checks << ',' << s.failures << '\n';
    } else {
      out << (s.failures == 0 ? "ok   " : "FAIL ") << s.name << " (" << s.checks << " checks"
          << (s.failures ? ", " + std::to_string(s.failures) + " failures" : "") << ")\n";
    }
    if (s.failures > 0) {
      err << "identity suite " << s.name << " failed " << s.failures << " of " << s.checks
          << " checks\n";
    }
  }
  return failed ? 2 : 0;
}

int run_bench_cmd(int n_min, int n_max, const std::string& backends_text,
                  const GeneratorOptions& gopts, std::uint64_t seed, int repetitions,
                  int warmup, int jobs, const std::string& format, std::ostream& out) {
  BenchConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.repetitions = repetitions;
  cfg.warmup_sweeps = warmup;
  cfg.jobs = jobs;
  cfg.spot_check_seed = seed;

  std::stringstream ss(backends_text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    cfg.backends.push_back(build_backend(name, gopts, n_min, seed));
  }

  const auto records = run_bench(cfg);
  if (format == "jsonl") {
    write_jsonl(out, records);
  } else {
    write_csv(out, records);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levi-Civita symbol evaluation, enumeration and benchmarking"};
  app.require_subcommand(1);

  const std::string format_help = "output format: plain, csv or jsonl";
  const auto format_check = CLI::IsMember({"plain", "csv", "jsonl"});

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one index tuple");
  int eval_n = 0;
  std::string eval_indices;
  std::string eval_backend = "oracle";
  std::string eval_format = "plain";
  std::uint64_t eval_seed = 12345;
  GeneratorOptions eval_gopts;
  eval->add_option("--n", eval_n, "dimension")->required();
  eval->add_option("--indices", eval_indices, "comma-separated 1-based indices")->required();
  eval->add_option("--backend", eval_backend, "evaluation backend");
  eval->add_option("--format", eval_format, format_help)->check(format_check);
  eval->add_option("--seed", eval_seed, "seed for --random-lambda");
  add_generator_flags(eval, eval_gopts);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "sweep all n^n tuples");
  int enum_n = 0;
  std::string enum_backend = "oracle";
  std::string enum_format = "plain";
  bool enum_nonzero = false;
  int enum_jobs = default_jobs();
  std::uint64_t enum_seed = 12345;
  GeneratorOptions enum_gopts;
  enumerate->add_option("--n", enum_n, "dimension")->required();
  enumerate->add_option("--backend", enum_backend, "evaluation backend");
  enumerate->add_flag("--nonzero-only", enum_nonzero, "stream the nonzero tuples");
  enumerate->add_option("--format", enum_format, format_help)->check(format_check);
  enumerate->add_option("--jobs", enum_jobs, "parallel sweep workers");
  enumerate->add_option("--seed", enum_seed, "seed for --random-lambda");
  add_generator_flags(enumerate, enum_gopts);

  // verify
  auto* verify = app.add_subcommand("verify", "compare backends against the oracle");
  int verify_n = 0;
  std::string verify_backends = "all";
  std::string verify_format = "plain";
  int verify_jobs = default_jobs();
  std::uint64_t verify_seed = 12345;
  GeneratorOptions verify_gopts;
  verify->add_option("--n", verify_n, "dimension")->required();
  verify->add_option("--backends", verify_backends,
                     "comma-separated backend names, or 'all'");
  verify->add_option("--format", verify_format, format_help)->check(format_check);
  verify->add_option("--jobs", verify_jobs, "parallel sweep workers");
  verify->add_option("--seed", verify_seed, "seed for --random-lambda");
  add_generator_flags(verify, verify_gopts);

  // identities
  auto* identities = app.add_subcommand("identities", "run the product-identity suites");
  std::uint64_t id_seed = 12345;
  int id_cases = 100;
  std::string id_format = "plain";
  identities->add_option("--seed", id_seed, "seed for the random matrices");
  identities->add_option("--cases", id_cases, "random matrices per dimension")
      ->check(CLI::PositiveNumber);
  identities->add_option("--format", id_format, format_help)->check(format_check);

  // bench
  auto* bench = app.add_subcommand("bench", "time full sweeps per backend and dimension");
  int bench_n_min = 2, bench_n_max = 5;
  std::string bench_backends;
  std::string bench_format = "csv";
  int bench_reps = 3, bench_warmup = 1, bench_jobs = 1;
  std::uint64_t bench_seed = 12345;
  GeneratorOptions bench_gopts;
  bench->add_option("--n-min", bench_n_min, "smallest dimension");
  bench->add_option("--n-max", bench_n_max, "largest dimension");
  bench->add_option("--backends", bench_backends, "comma-separated backend names")->required();
  bench->add_option("--repetitions", bench_reps, "timed sweeps per record");
  bench->add_option("--warmup", bench_warmup, "discarded warmup sweeps");
  bench->add_option("--jobs", bench_jobs, "time the partitioned sweep with this many workers");
  bench->add_option("--seed", bench_seed, "seed for the correctness spot checks");
  bench->add_option("--format", bench_format, "output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  add_generator_flags(bench, bench_gopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    const int code = app.exit(e, e.get_exit_code() == 0 ? out : dummy, err);
    if (dummy.tellp() > 0) err << dummy.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) {
      return run_eval(eval_n, eval_indices, eval_backend, eval_gopts, eval_seed, eval_format,
                      out);
    }
    if (enumerate->parsed()) {
      return run_enumerate(enum_n, enum_backend, enum_gopts, enum_seed, enum_nonzero,
                           enum_format, enum_jobs, out, err);
    }
    if (verify->parsed()) {
      return run_verify(verify_n, verify_backends, verify_gopts, verify_seed, verify_format,
                        verify_jobs, out, err);
    }
    if (identities->parsed()) {
      return run_identities(id_seed, id_cases, id_format, out, err);
    }
    if (bench->parsed()) {
      return run_bench_cmd(bench_n_min, bench_n_max, bench_backends, bench_gopts, bench_seed,
                           bench_reps, bench_warmup, bench_jobs, bench_format, out);
    }
  } catch (const evaluation_error& e) {
    err << "evaluation failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace levi::cli
