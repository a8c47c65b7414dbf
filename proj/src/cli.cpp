#include "graphlab/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "graphlab/claims.hpp"
#include "graphlab/closed_forms.hpp"
#include "graphlab/graph_core.hpp"
#include "graphlab/indices.hpp"
#include "graphlab/metric.hpp"
#include "graphlab/serialize.hpp"

namespace graphlab::cli {

namespace {

using nlohmann::ordered_json;

/// Invalid arguments detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char delimiter) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, delimiter)) {
    parts.push_back(current);
  }
  return parts;
}

unsigned parse_cap_text(const std::string& text, const std::string& origin) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size() || value > kMaxGammaK) {
      throw std::out_of_range(text);
    }
    return static_cast<unsigned>(value);
  } catch (const std::logic_error&) {
    throw UsageError(origin + " must be an integer between 0 and " + std::to_string(kMaxGammaK) + ", got '" + text +
                     "'");
  }
}

unsigned resolve_cap(const std::optional<unsigned>& flag, const std::optional<std::string>& env) {
  if (flag) {
    if (*flag > kMaxGammaK) {
      throw UsageError("--cap must not exceed " + std::to_string(kMaxGammaK));
    }
    return *flag;
  }
  if (env && !env->empty()) {
    return parse_cap_text(*env, "GRAPHLAB_KCAP");
  }
  return kDefaultKCap;
}

std::optional<PrimeBasis> parse_basis(const std::optional<std::string>& text, unsigned k) {
  if (!text) {
    return std::nullopt;
  }
  std::vector<BigInt> primes;
  for (const auto& part : split(*text, ',')) {
    BigInt value;
    if (part.empty() || value.set_str(part, 10) != 0) {
      throw UsageError("--primes entry '" + part + "' is not an integer");
    }
    primes.push_back(value);
  }
  if (primes.size() != k) {
    throw UsageError("--primes lists " + std::to_string(primes.size()) + " primes but --k is " + std::to_string(k));
  }
  try {
    return PrimeBasis(std::move(primes));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string valid_index_names() {
  std::string names;
  for (const IndexId id : kAllIndices) {
    names += (names.empty() ? "" : ", ") + std::string(index_name(id));
  }
  return names;
}

std::vector<IndexId> parse_index_list(const std::string& text) {
  if (text == "all") {
    return {kAllIndices.begin(), kAllIndices.end()};
  }
  std::vector<IndexId> ids;
  for (const auto& part : split(text, ',')) {
    const auto id = parse_index_name(part);
    if (!id) {
      throw UsageError("unknown index '" + part + "'; valid names: all, " + valid_index_names());
    }
    ids.push_back(*id);
  }
  if (ids.empty()) {
    throw UsageError("--index needs at least one name; valid names: all, " + valid_index_names());
  }
  return ids;
}

std::vector<std::string> labels_of(const DprimeGraph& g) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < g.order(); ++v) {
    labels.push_back(g.label(v));
  }
  return labels;
}

std::vector<std::string> labels_of(const GeneralDivisorGraph& g) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < g.order(); ++v) {
    labels.push_back(g.graph().label(v));
  }
  return labels;
}

template <typename Graph>
void emit_graph(const Graph& g, const DistanceMatrix& distances, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << graph_to_json(g).dump(2) << '\n';
  } else if (format == "dot") {
    out << graph_to_dot(g);
  } else {
    out << distance_matrix_csv(distances, labels_of(g));
  }
}

DprimeGraph checked_gamma(unsigned k, const std::optional<std::string>& primes) {
  auto basis = parse_basis(primes, k);
  try {
    return build_gamma(k, std::move(basis));
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
}

GeneralDivisorGraph checked_general(std::uint64_t n, std::size_t max_divisors) {
  try {
    return build_general(n, max_divisors);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  // gamma / indices
  unsigned k = 0;
  std::optional<std::string> primes;
  std::string emit = "json";
  // divisor-graph / indices
  std::uint64_t n = 0;
  std::size_t max_divisors = kDefaultMaxDivisors;
  // indices
  std::string index_list = "all";
  std::string index_format = "json";
  std::optional<unsigned> cap;
  // verify
  unsigned k_min = 0;
  unsigned k_max = kDefaultKCap;
  // claims
  std::optional<unsigned> claims_k;
  std::string claims_format = "markdown";
  bool strict = false;
  unsigned threads = 1;
};

int cmd_gamma(const Options& o, std::ostream& out) {
  const DprimeGraph g = checked_gamma(o.k, o.primes);
  const DistanceMatrix distances = o.emit == "csv" ? distance_matrix_fast(g) : DistanceMatrix();
  emit_graph(g, distances, o.emit, out);
  return kSuccess;
}

int cmd_divisor_graph(const Options& o, std::ostream& out) {
  const GeneralDivisorGraph g = checked_general(o.n, o.max_divisors);
  const DistanceMatrix distances = o.emit == "csv" ? distance_matrix_bfs(g.graph()) : DistanceMatrix();
  emit_graph(g, distances, o.emit, out);
  return kSuccess;
}

int cmd_indices(const Options& o, bool by_k, const std::optional<std::string>& kcap_env, std::ostream& out) {
  const auto ids = parse_index_list(o.index_list);
  ordered_json descriptor;
  std::optional<IndexEngine> engine;
  if (by_k) {
    const unsigned cap = resolve_cap(o.cap, kcap_env);
    if (o.k > cap) {
      throw UsageError("--k " + std::to_string(o.k) + " exceeds the cap " + std::to_string(cap) +
                       " (raise it with --cap or GRAPHLAB_KCAP)");
    }
    const DprimeGraph g = checked_gamma(o.k, o.primes);
    engine.emplace(g);
    descriptor["family"] = "gamma";
    descriptor["k"] = o.k;
    if (g.basis()) {
      ordered_json primes = ordered_json::array();
      for (const auto& p : g.basis()->primes()) {
        primes.push_back(p.get_str());
      }
      descriptor["primes"] = std::move(primes);
    }
  } else {
    const GeneralDivisorGraph g = checked_general(o.n, o.max_divisors);
    engine.emplace(g);
    descriptor["family"] = "divisor";
    descriptor["n"] = std::to_string(o.n);
  }
  descriptor["order"] = engine->order();
  descriptor["size"] = engine->edges().size();

  const IndexReport report = compute_report(*engine, ids);
  if (o.index_format == "json") {
    out << index_report_json(descriptor, report).dump(2) << '\n';
  } else {
    out << "graph: " << descriptor.dump() << '\n' << index_report_table(report);
  }
  return kSuccess;
}

int cmd_verify(const Options& o, const std::optional<std::string>& kcap_env, std::ostream& out) {
  const unsigned cap = resolve_cap(o.cap, kcap_env);
  if (o.k_min > o.k_max) {
    throw UsageError("--k-min must not exceed --k-max");
  }
  if (o.k_max > cap) {
    throw UsageError("--k-max " + std::to_string(o.k_max) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --cap or GRAPHLAB_KCAP)");
  }
  std::size_t total = 0;
  std::size_t failed = 0;
  for (unsigned k = o.k_min; k <= o.k_max; ++k) {
    for (const FormulaCheck& check : cross_check(k)) {
      ++total;
      failed += check.pass ? 0 : 1;
      out << check.describe() << (check.pass ? "  ok" : "  FAILED") << '\n';
    }
  }
  out << "verify: " << total << " checks, " << failed << " failed\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

int cmd_claims(const Options& o, std::ostream& out) {
  if (o.claims_k) {
    bool known = false;
    for (const Claim& c : builtin_claims()) {
      known = known || c.k == *o.claims_k;
    }
    if (!known) {
      throw UsageError("no claims are registered for k=" + std::to_string(*o.claims_k) + " (available: 3, 4, 5)");
    }
  }
  const auto reports = run_all(o.claims_k, o.threads);
  out << render_report(reports, o.claims_format == "json" ? ReportFormat::json : ReportFormat::markdown);
  if (o.strict && summarize(reports).mismatch > 0) {
    return kStrictClaimsMismatch;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& kcap_env) {
  CLI::App app{"Divisor function graphs: construction, topological indices, formula and claim verification",
               "graphlab"};
  app.require_subcommand(1, 1);
  Options o;

  auto* gamma = app.add_subcommand("gamma", "Build the k-dprime divisor function graph");
  gamma->add_option("--k", o.k, "Number of distinct primes")->required();
  gamma->add_option("--primes", o.primes, "Comma-separated prime basis, e.g. 2,3,5");
  gamma->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));

  auto* divisor = app.add_subcommand("divisor-graph", "Build the divisor function graph of n");
  divisor->add_option("--n", o.n, "Positive integer")->required();
  divisor->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "dot", "csv"}));
  divisor->add_option("--max-divisors", o.max_divisors, "Reject n with more divisors than this");

  auto* indices = app.add_subcommand("indices", "Compute topological indices exactly");
  auto* k_opt = indices->add_option("--k", o.k, "Γ_k target");
  auto* n_opt = indices->add_option("--n", o.n, "G_D(n) target");
  k_opt->excludes(n_opt);
  n_opt->excludes(k_opt);
  indices->add_option("--primes", o.primes, "Prime basis for --k");
  indices->add_option("--index", o.index_list, "Comma-separated index names or 'all'");
  indices->add_option("--format", o.index_format, "Output format")->check(CLI::IsMember({"json", "table"}));
  indices->add_option("--cap", o.cap, "Largest accepted k (default 10 or GRAPHLAB_KCAP)");
  indices->add_option("--max-divisors", o.max_divisors, "Reject n with more divisors than this");

  auto* verify = app.add_subcommand("verify", "Check every closed form against enumeration");
  verify->add_option("--k-min", o.k_min, "First k");
  verify->add_option("--k-max", o.k_max, "Last k");
  verify->add_option("--cap", o.cap, "Largest accepted k (default 10 or GRAPHLAB_KCAP)");

  auto* claims = app.add_subcommand("claims", "Compare published Γ_3, Γ_4, Γ_5 values with the oracle");
  claims->add_option("--k", o.claims_k, "Restrict to one graph (3, 4 or 5)");
  claims->add_option("--format", o.claims_format, "Output format")->check(CLI::IsMember({"markdown", "json"}));
  claims->add_flag("--strict", o.strict, "Exit with code 3 when any claim mismatches");
  claims->add_option("--threads", o.threads, "Worker threads for claim evaluation")->check(CLI::Range(1U, 256U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* context = &app;
    for (const CLI::App* sub : app.get_subcommands()) {
      context = sub;
    }
    err << context->help();
    return kUsageError;
  }

  try {
    if (gamma->parsed()) {
      return cmd_gamma(o, out);
    }
    if (divisor->parsed()) {
      return cmd_divisor_graph(o, out);
    }
    if (indices->parsed()) {
      if (k_opt->count() == 0 && n_opt->count() == 0) {
        throw UsageError("indices needs exactly one of --k or --n");
      }
      if (n_opt->count() > 0 && o.primes) {
        throw UsageError("--primes applies only to --k");
      }
      return cmd_indices(o, k_opt->count() > 0, kcap_env, out);
    }
    if (verify->parsed()) {
      return cmd_verify(o, kcap_env, out);
    }
    if (claims->parsed()) {
      return cmd_claims(o, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace graphlab::cli
