// Copyright 2026 The filament-prng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "filament_prng/error.hpp"
#include "filament_prng/filament.hpp"
#include "filament_prng/prng.hpp"
#include "filament_prng/serialize.hpp"
#include "filament_prng/stattest.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace fprng::tools {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest stream length used when -n is omitted.
constexpr std::int64_t kMaxDefaultCount = 10'000'000;

struct StreamArgs {
  std::string kind = "eicg";
  int M = 3;
  std::optional<std::int64_t> q;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t x0 = 0;
  std::string preset;
  std::vector<std::int64_t> primes;
  std::optional<std::int64_t> count;
  std::int64_t start = 0;
};

void add_stream_options(CLI::App* app, StreamArgs& args) {
  app->add_option("--kind", args.kind, "Stream kind")
      ->check(CLI::IsMember({"vfe", "eicg", "eicg-pow2", "lcg", "compound"}));
  app->add_option("-M", args.M, "Polygon side count");
  app->add_option("-q", args.q, "Modulus");
  app->add_option("-a", args.a, "Multiplier");
  app->add_option("-b", args.b, "Shift");
  app->add_option("--x0", args.x0, "LCG seed");
  app->add_option("--preset", args.preset, "Named LCG")->check(CLI::IsMember({"randu"}));
  app->add_option("--primes", args.primes, "Compound stream primes")->delimiter(',');
  app->add_option("-n", args.count, "Sample count");
  app->add_option("--start", args.start, "Index of the first sample");
}

std::int64_t require_q(const StreamArgs& args) {
  if (!args.q) throw UsageError("--kind " + args.kind + " needs -q");
  return *args.q;
}

StreamSpec build_spec(const StreamArgs& args) {
  StreamSpec spec;
  spec.M = args.M;
  spec.a = args.a;
  spec.b = args.b;
  if (!args.preset.empty()) {
    if (args.kind != "lcg") throw UsageError("--preset applies to --kind lcg");
    spec = randu_preset();
    spec.M = args.M;
    return spec;
  }
  if (args.kind == "vfe") {
    spec.kind = StreamKind::kVfeCircle;
    spec.modulus = require_q(args);
  } else if (args.kind == "eicg") {
    spec.kind = StreamKind::kEicg;
    spec.modulus = require_q(args);
  } else if (args.kind == "eicg-pow2") {
    spec.kind = StreamKind::kEicgPow2;
    spec.modulus = require_q(args);
  } else if (args.kind == "lcg") {
    spec.kind = StreamKind::kLcg;
    spec.modulus = require_q(args);
    spec.seed = args.x0;
  } else {
    spec.kind = StreamKind::kCompound;
    spec.primes = args.primes;
  }
  spec.validate();
  return spec;
}

std::int64_t sample_count(const StreamArgs& args, const StreamSpec& spec) {
  if (args.count) return *args.count;
  if (spec.kind == StreamKind::kLcg) throw UsageError("--kind lcg needs -n");
  const std::int64_t period = spec.period();
  if (period > kMaxDefaultCount) {
    throw UsageError("period " + std::to_string(period) + " is too long to default; pass -n");
  }
  return period;
}

std::vector<double> unit_values(const std::vector<UnitSample>& samples) {
  std::vector<double> u;
  u.reserve(samples.size());
  for (const UnitSample& s : samples) u.push_back(s.u);
  return u;
}

// Writes through a file when path is set, otherwise to out.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer write) {
  if (path.empty()) {
    write(out);
    out.flush();
    if (!out) throw IoError("write to standard output failed");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path);
  write(file);
  file.flush();
  if (!file) throw IoError("write to " + path + " failed");
}

void emit_json(const nlohmann::ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << '\n';
}

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int m = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {m, m};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad -M range '" + text + "', expected N or LO..HI");
  }
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  try {
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
      pos = comma + 1;
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad prime list '" + text + "'");
  }
  return out;
}

void print_suite(std::ostream& out, const SuiteResult& r) {
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %10lld  max_error %-12.3e tol %-9.1e %s\n",
                r.name.c_str(), static_cast<long long>(r.cases), r.max_error, r.tolerance,
                r.passed ? "PASS" : "FAIL");
  out << line;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::string> m_range;
  std::optional<std::int64_t> qmax;
  std::vector<std::string> primes;
  std::int64_t pmax = 10'000;
  std::optional<double> tolerance;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto m_range = [&](int lo, int hi) {
    const auto [a, b] = args.m_range ? parse_m_range(*args.m_range) : std::pair{lo, hi};
    PolygonConfig{a, {0, 1}}.validate();
    return std::pair{a, b};
  };
  std::vector<SuiteResult> results;
  const bool all = args.suite == "all";
  const auto tol = [&](double fallback) { return args.tolerance.value_or(fallback); };
  if (all || args.suite == "gauss") {
    results.push_back(verify_gauss(args.qmax.value_or(200), tol(1e-9)));
  }
  if (all || args.suite == "theorem1") {
    const auto [lo, hi] = m_range(3, 8);
    results.push_back(verify_theorem1(lo, hi, args.qmax.value_or(40), tol(1e-8)));
  }
  if (all || args.suite == "closure") {
    const auto [lo, hi] = m_range(3, 10);
    results.push_back(verify_closure(lo, hi, args.qmax.value_or(50), tol(1e-7)));
  }
  if (all || args.suite == "compound") {
    std::vector<std::vector<std::int64_t>> sets;
    for (const std::string& text : args.primes) sets.push_back(parse_primes(text));
    if (sets.empty()) sets = {{5, 7}, {11, 13, 17}};
    results.push_back(verify_compound(m_range(3, 3).first, sets, args.pmax, tol(1e-9)));
  }
  bool ok = true;
  for (const SuiteResult& r : results) {
    print_suite(out, r);
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_generate(const StreamArgs& args, const std::string& format, const std::string& path,
                 std::ostream& out) {
  const StreamSpec spec = build_spec(args);
  if (spec.kind == StreamKind::kVfeCircle && !args.count) {
    const std::vector<CirclePoint> points = vfe_stream(spec.M, spec.modulus);
    emit(path, out, [&](std::ostream& o) {
      if (format == "csv") write_circle_csv(o, points);
      if (format == "json") write_circle_json(o, points);
      if (format == "f64le") write_circle_f64le(o, points);
    });
    return kExitOk;
  }
  const std::vector<UnitSample> samples =
      generate_parallel(spec, sample_count(args, spec), args.start);
  emit(path, out, [&](std::ostream& o) {
    if (format == "csv") write_samples_csv(o, samples);
    if (format == "json") write_samples_json(o, samples);
    if (format == "f64le") write_samples_f64le(o, samples);
  });
  return kExitOk;
}

int cmd_polygon(int M, std::int64_t q, std::int64_t p, const std::string& format,
                const std::string& path, std::ostream& out) {
  const std::vector<Vec3> vertices = build_polygon(PolygonConfig{M, {p, q}});
  emit(path, out, [&](std::ostream& o) {
    if (format == "csv") write_polygon_csv(o, vertices);
    if (format == "json") write_polygon_json(o, vertices);
  });
  return kExitOk;
}

std::vector<std::int64_t> default_lags(int k) {
  std::vector<std::int64_t> lags;
  for (int i = 0; i < k; ++i) lags.push_back(i);
  return lags;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversive generators, filament polygons and discrepancy tests",
               "filament-prng"};
  app.require_subcommand(1);

  StreamArgs gen;
  std::string gen_format = "csv";
  std::string gen_path;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a stream of samples");
  add_stream_options(generate_cmd, gen);
  generate_cmd->add_option("--format", gen_format)
      ->check(CLI::IsMember({"csv", "json", "f64le"}));
  generate_cmd->add_option("-o,--output", gen_path, "Output file (default stdout)");

  VerifyArgs ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run numerical verification suites");
  verify_cmd->add_option("suite", ver.suite)
      ->check(CLI::IsMember({"gauss", "theorem1", "closure", "compound", "all"}));
  verify_cmd->add_option("-M", ver.m_range, "Side count or range LO..HI");
  verify_cmd->add_option("--qmax", ver.qmax);
  verify_cmd->add_option("--primes", ver.primes, "Comma separated prime set, repeatable");
  verify_cmd->add_option("--pmax", ver.pmax);
  verify_cmd->add_option("--tol", ver.tolerance, "Override the suite tolerance");

  CLI::App* stats_cmd = app.add_subcommand("stats", "Statistical tests as JSON");
  stats_cmd->require_subcommand(1);

  StreamArgs serial;
  int serial_k = 2;
  std::vector<std::int64_t> serial_lags;
  CLI::App* serial_cmd = stats_cmd->add_subcommand("serial", "Serial test discrepancy");
  add_stream_options(serial_cmd, serial);
  serial_cmd->add_option("-k", serial_k, "Tuple dimension");
  serial_cmd->add_option("--lags", serial_lags)->delimiter(',');

  std::int64_t plane_samples = 1'000'000;
  CLI::App* planes_cmd = stats_cmd->add_subcommand("randu-planes", "RANDU plane count");
  planes_cmd->add_option("-n", plane_samples);

  StreamArgs chi;
  int bins = 20;
  CLI::App* chi_cmd = stats_cmd->add_subcommand("chi2", "Chi-square equidistribution");
  add_stream_options(chi_cmd, chi);
  chi_cmd->add_option("--bins", bins);

  std::int64_t t3_p = 101;
  int t3_k = 2;
  double t3_t = 0.5;
  std::int64_t t3_samples = 0;
  CLI::App* t3_cmd = stats_cmd->add_subcommand("theorem3", "Bounds and empirical fraction");
  t3_cmd->add_option("-q,-p", t3_p, "Prime modulus");
  t3_cmd->add_option("-k", t3_k);
  t3_cmd->add_option("-t", t3_t);
  t3_cmd->add_option("--samples", t3_samples, "Multipliers tested, 0 for all");

  int poly_M = 3;
  std::int64_t poly_q = 1;
  std::int64_t poly_p = 0;
  std::string poly_format = "csv";
  std::string poly_path;
  CLI::App* polygon_cmd = app.add_subcommand("polygon", "Polygon vertices for plotting");
  polygon_cmd->add_option("-M", poly_M);
  polygon_cmd->add_option("-q", poly_q);
  polygon_cmd->add_option("-p", poly_p);
  polygon_cmd->add_option("--format", poly_format)->check(CLI::IsMember({"csv", "json"}));
  polygon_cmd->add_option("-o,--output", poly_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(gen, gen_format, gen_path, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
    if (polygon_cmd->parsed()) {
      return cmd_polygon(poly_M, poly_q, poly_p, poly_format, poly_path, out);
    }
    if (serial_cmd->parsed()) {
      const StreamSpec spec = build_spec(serial);
      const auto u = unit_values(generate(spec, sample_count(serial, spec), serial.start));
      const auto lags = serial_lags.empty() ? default_lags(serial_k) : serial_lags;
      emit_json(to_json(serial_test(u, serial_k, lags)), out);
    } else if (planes_cmd->parsed()) {
      nlohmann::ordered_json doc;
      doc["planes"] = randu_plane_count(plane_samples);
      emit_json(doc, out);
    } else if (chi_cmd->parsed()) {
      const StreamSpec spec = build_spec(chi);
      const auto u = unit_values(generate(spec, sample_count(chi, spec), chi.start));
      const ChiSquare result = chi_square_uniformity(u, bins);
      nlohmann::ordered_json doc;
      doc["n"] = u.size();
      doc["bins"] = result.bins;
      doc["dof"] = result.bins - 1;
      doc["statistic"] = result.statistic;
      if (result.bins - 1 <= 100) {
        doc["quantile_0.99"] = chi_square_quantile(result.bins - 1, 0.99);
        doc["quantile_0.999"] = chi_square_quantile(result.bins - 1, 0.999);
      }
      emit_json(doc, out);
    } else if (t3_cmd->parsed()) {
      nlohmann::ordered_json doc = to_json(bound_report(t3_p, t3_k, t3_t));
      const Theorem3Fraction f = theorem3_fraction(t3_p, t3_k, t3_t, t3_samples);
      doc["tested"] = f.tested;
      doc["above_threshold"] = f.above;
      doc["fraction"] = f.fraction;
      emit_json(doc, out);
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fprng::tools
