#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "progressio/construct.hpp"
#include "progressio/dirichlet.hpp"
#include "progressio/error.hpp"
#include "progressio/factor.hpp"
#include "progressio/galois.hpp"
#include "progressio/oracle.hpp"
#include "progressio/parallel.hpp"

namespace progressio::cli {

namespace {

struct RunConfig {
  std::uint64_t modulus = 0;
  std::string a, b, f;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_hits = 16;
  std::uint64_t samples = 1000;
  std::string strategy = "constructed";
  std::string cert_path;
  std::string output;
  std::string format = "text";
  std::string level = "quick";
};

// PROGRESSIO_THREADS caps the worker count; 0 or unset means one per core.
unsigned threads_from_env() {
  const char* v = std::getenv("PROGRESSIO_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    return 0;
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::OutOfRange:
    case ErrorCode::FieldMismatch:
      return kUsage;
    default:
      return kMathFailure;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("--cert", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw CLI::ValidationError("-o", "cannot write " + cfg.output);
  file << text;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const PrimeField F(cfg.modulus);
  const StableCertificate cert = build_stable(parse_poly(F, cfg.a), parse_poly(F, cfg.b), cfg.n, cfg.seed);
  emit(cfg, serialize(cert, {"progressio stable certificate", "seed: " + std::to_string(cfg.seed)}), out);
  return kOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const StableCertificate cert = parse_certificate(read_file(cfg.cert_path));
  const auto clauses = sn_clauses(cert);
  emit(cfg, to_string(clauses), out);
  for (const auto& c : clauses) {
    if (!c.ok) {
      err << "ClauseFailed: " << c.name << ": " << c.detail << '\n';
      return kMathFailure;
    }
  }
  return kOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const PrimeField F(cfg.modulus);
  const Poly a = parse_poly(F, cfg.a), b = parse_poly(F, cfg.b);
  SearchReport r = [&] {
    if (cfg.strategy == "exhaustive") return search_exhaustive(a, b, cfg.n, threads_from_env());
    if (cfg.strategy == "random") return search_random(a, b, cfg.n, cfg.samples, cfg.max_hits, cfg.seed);
    return search_constructed(a, b, cfg.n, cfg.max_hits, cfg.seed);
  }();
  emit(cfg, cfg.format == "csv" ? to_csv(r) : to_text(r), out);
  return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const StableCertificate cert = parse_certificate(read_file(cfg.cert_path));
  const DensityResult d = density_scan(cert, threads_from_env());
  emit(cfg, cfg.format == "csv" ? to_csv(d) : to_text(d), out);
  return kOk;
}

int cmd_histogram(const RunConfig& cfg, std::ostream& out) {
  const StableCertificate cert = parse_certificate(read_file(cfg.cert_path));
  std::vector<FieldElem> samples;
  for (std::uint64_t v = 1; v < cert.field.modulus(); ++v) samples.emplace_back(v);
  const CycleHistogram h = cycle_type_histogram(cert.a, cert.b, cert.c, samples, cfg.seed, threads_from_env());
  emit(cfg, to_csv(h), out);
  return kOk;
}

int cmd_factor(const RunConfig& cfg, std::ostream& out) {
  const PrimeField F(cfg.modulus);
  emit(cfg, to_string(factorize(parse_poly(F, cfg.f), cfg.seed)), out);
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  const auto results = oracle::run_selftest(cfg.level == "full", cfg.seed);
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    text += std::string(r.ok ? "PASS" : "FAIL") + "  " + r.name + "  (" + r.detail + ")\n";
    ok = ok && r.ok;
  }
  emit(cfg, text, out);
  return ok ? kOk : kMathFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Irreducible polynomials in arithmetic progressions over prime fields", "progressio"};
  app.require_subcommand(1);

  auto pencil_opts = [&cfg](CLI::App* sub) {
    sub->add_option("-p,--modulus", cfg.modulus, "prime modulus")->required();
    sub->add_option("-a", cfg.a, "polynomial a(X)")->required();
    sub->add_option("-b", cfg.b, "polynomial b(X)")->required();
    sub->add_option("-n", cfg.n, "target degree in X")->required();
    sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
  };

  auto* construct = app.add_subcommand("construct", "build a stable certificate");
  pencil_opts(construct);

  auto* certify = app.add_subcommand("certify", "replay a certificate and certify S_n");
  certify->add_option("--cert", cfg.cert_path, "certificate file")->required();
  certify->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "search the progression for irreducible members");
  pencil_opts(search);
  search->add_option("--strategy", cfg.strategy)
      ->check(CLI::IsMember({"constructed", "exhaustive", "random"}))
      ->capture_default_str();
  search->add_option("--max-hits", cfg.max_hits)->capture_default_str();
  search->add_option("--samples", cfg.samples, "samples for --strategy random")->capture_default_str();
  search->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "text"}))->capture_default_str();

  auto* count = app.add_subcommand("count", "count irreducible specializations of a certificate");
  count->add_option("--cert", cfg.cert_path, "certificate file")->required();
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "text"}))->capture_default_str();
  count->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* histogram = app.add_subcommand("histogram", "Frobenius cycle types over all alpha != 0");
  histogram->add_option("--cert", cfg.cert_path, "certificate file")->required();
  histogram->add_option("--seed", cfg.seed)->capture_default_str();
  histogram->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* factor = app.add_subcommand("factor", "factor a polynomial");
  factor->add_option("-p,--modulus", cfg.modulus, "prime modulus")->required();
  factor->add_option("-f", cfg.f, "polynomial")->required();
  factor->add_option("--seed", cfg.seed)->capture_default_str();
  factor->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "cross-check against the naive oracles");
  selftest->add_option("--level", cfg.level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  selftest->add_option("--seed", cfg.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (certify->parsed()) return cmd_certify(cfg, out, err);
    if (search->parsed()) return cmd_search(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (histogram->parsed()) return cmd_histogram(cfg, out);
    if (factor->parsed()) return cmd_factor(cfg, out);
    if (selftest->parsed()) return cmd_selftest(cfg, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace progressio::cli
