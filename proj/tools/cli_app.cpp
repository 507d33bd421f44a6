#include "cli_app.hpp"

#include "shg/oracle.hpp"
#include "shg/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace shg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class InputKind { fock, coherent, thermal, weights_file };

struct Config {
  InputKind kind = InputKind::fock;
  int fock_n = 0;
  double mean = 0.0;
  std::string weights_path;

  int order = 0;
  std::optional<double> gamma;
  std::optional<std::string> gamma_sweep;
  std::string format = "text";
  std::string output_path;
  int precision = 50;
  double epsilon = 1e-12;

  // diagrams only
  int from_order = 2;
  bool list = false;
  std::string render_mode;
  std::string outdir = ".";
  std::optional<int> coeff_n;
};

std::string rational_str(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{
      {"num", boost::multiprecision::numerator(q).str()},
      {"den", boost::multiprecision::denominator(q).str()}};
}

std::string real_str(const Real& value, int digits) {
  return value.str(std::min(digits, 50));
}

ordered_json input_json(const Config& config,
                        const InputStateWeights* weights) {
  ordered_json meta;
  switch (config.kind) {
    case InputKind::fock:
      meta = {{"kind", "fock"}, {"n", config.fock_n}};
      break;
    case InputKind::coherent:
      meta = {{"kind", "coherent"}, {"mean", config.mean},
              {"epsilon", config.epsilon}};
      break;
    case InputKind::thermal:
      meta = {{"kind", "thermal"}, {"mean", config.mean},
              {"epsilon", config.epsilon}};
      break;
    case InputKind::weights_file:
      meta = {{"kind", "weights"}, {"path", config.weights_path}};
      break;
  }
  if (weights) {
    meta["cutoff_n"] = weights->cutoff_n;
    meta["tail_bound"] = real_str(weights->tail_bound, config.precision);
  }
  return meta;
}

std::string input_text(const Config& config) {
  std::ostringstream os;
  switch (config.kind) {
    case InputKind::fock: os << "fock n=" << config.fock_n; break;
    case InputKind::coherent: os << "coherent mean=" << config.mean; break;
    case InputKind::thermal: os << "thermal mean=" << config.mean; break;
    case InputKind::weights_file: os << "weights " << config.weights_path; break;
  }
  return os.str();
}

// All output goes through here: stdout directly, files via a temp name and
// a rename so failures leave nothing behind.
int write_payload(const std::string& payload, const Config& config,
                  std::ostream& out, std::ostream& err) {
  if (config.output_path.empty()) {
    out << payload;
    return 0;
  }
  const std::filesystem::path target(config.output_path);
  const std::filesystem::path temp(config.output_path + ".tmp");
  std::error_code ec;
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file || !(file << payload) || !file.flush()) {
      err << "error: cannot write " << target.string() << "\n";
      std::filesystem::remove(temp, ec);
      return 3;
    }
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    err << "error: cannot move output into place at " << target.string()
        << "\n";
    std::filesystem::remove(temp, ec);
    return 3;
  }
  return 0;
}

ordered_json fock_terms_json(const DistributionExpansion& e) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coeff] : e.terms)
    terms.push_back(ordered_json{{"v", key.first},
                                 {"power", key.second},
                                 {"coefficient", rational_json(coeff)}});
  return terms;
}

std::string expand_payload_fock(const Config& config,
                                const DistributionExpansion& e) {
  if (config.format == "json") {
    ordered_json doc{{"schema", kSchemaId},
                     {"version", kToolVersion},
                     {"command", "expand"},
                     {"input", input_json(config, nullptr)},
                     {"order", e.max_order},
                     {"terms", fock_terms_json(e)}};
    return doc.dump(2) + "\n";
  }
  if (config.format == "csv") {
    std::ostringstream os;
    os << "v,power,num,den\n";
    for (const auto& [key, coeff] : e.terms)
      os << key.first << "," << key.second << ","
         << boost::multiprecision::numerator(coeff).str() << ","
         << boost::multiprecision::denominator(coeff).str() << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "schema: " << kSchemaId << "\n"
     << "command: expand\n"
     << "input: " << input_text(config) << "\n"
     << "order: " << e.max_order << "\n"
     << "v  power  coefficient\n";
  for (const auto& [key, coeff] : e.terms)
    os << key.first << "  " << key.second << "  " << rational_str(coeff)
       << "\n";
  return os.str();
}

std::string expand_payload_mixture(const Config& config,
                                   const MixtureExpansion& e) {
  if (config.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, coeff] : e.terms)
      terms.push_back(
          ordered_json{{"v", key.first},
                       {"power", key.second},
                       {"coefficient", real_str(coeff, config.precision)}});
    ordered_json components = ordered_json::array();
    for (std::size_t i = 0; i < e.components.size(); ++i) {
      const auto& [n, table] = e.components[i];
      components.push_back(
          ordered_json{{"n", n},
                       {"weight", real_str(e.origin.weights[i].second,
                                           config.precision)},
                       {"terms", fock_terms_json(table)}});
    }
    ordered_json doc{{"schema", kSchemaId},
                     {"version", kToolVersion},
                     {"command", "expand"},
                     {"input", input_json(config, &e.origin)},
                     {"order", e.max_order},
                     {"precision", config.precision},
                     {"terms", terms},
                     {"components", components}};
    return doc.dump(2) + "\n";
  }
  if (config.format == "csv") {
    std::ostringstream os;
    os << "v,power,coefficient\n";
    for (const auto& [key, coeff] : e.terms)
      os << key.first << "," << key.second << ","
         << real_str(coeff, config.precision) << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "schema: " << kSchemaId << "\n"
     << "command: expand\n"
     << "input: " << input_text(config) << "\n"
     << "order: " << e.max_order << "\n"
     << "cutoff_n: " << e.origin.cutoff_n << "\n"
     << "tail_bound: " << real_str(e.origin.tail_bound, 3) << "\n"
     << "precision: " << config.precision << "\n"
     << "v  power  coefficient\n";
  for (const auto& [key, coeff] : e.terms)
    os << key.first << "  " << key.second << "  "
       << real_str(coeff, config.precision) << "\n";
  return os.str();
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);  // shortest round-trip form
}

std::string evaluate_payload(const Config& config,
                             const std::vector<EvalRow>& rows, int order,
                             double gamma) {
  if (config.format == "json") {
    ordered_json body = ordered_json::array();
    for (const auto& row : rows)
      body.push_back(ordered_json{{"v", row.target_v},
                                  {"probability", row.probability},
                                  {"remainder", row.remainder_estimate},
                                  {"in_range", row.in_range}});
    ordered_json doc{{"schema", kSchemaId},
                     {"version", kToolVersion},
                     {"command", "evaluate"},
                     {"input", input_json(config, nullptr)},
                     {"order", order},
                     {"gamma", gamma},
                     {"rows", body}};
    return doc.dump(2) + "\n";
  }
  if (config.format == "csv") {
    std::ostringstream os;
    os << "v,probability,remainder_estimate,in_range\n";
    for (const auto& row : rows)
      os << row.target_v << "," << format_double(row.probability) << ","
         << format_double(row.remainder_estimate) << ","
         << (row.in_range ? "true" : "false") << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "command: evaluate\n"
     << "input: " << input_text(config) << "\n"
     << "order: " << order << "\ngamma: " << format_double(gamma) << "\n"
     << "v  probability  remainder  in_range\n";
  for (const auto& row : rows)
    os << row.target_v << "  " << format_double(row.probability) << "  "
       << format_double(row.remainder_estimate) << "  "
       << (row.in_range ? "true" : "false")
       << (row.in_range ? "" : "   <- outside [0,1], truncation too coarse")
       << "\n";
  return os.str();
}

struct MomentRow {
  double gamma;
  MomentSummary summary;
};

std::string moments_payload(const Config& config,
                            const std::vector<MomentRow>& rows, int order) {
  if (config.format == "json") {
    ordered_json body = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json entry{{"gamma", row.gamma},
                         {"mean", row.summary.mean},
                         {"variance", row.summary.variance}};
      if (row.summary.mandel_q)
        entry["mandel_q"] = *row.summary.mandel_q;
      else
        entry["mandel_q"] = nullptr;
      body.push_back(entry);
    }
    ordered_json doc{{"schema", kSchemaId},
                     {"version", kToolVersion},
                     {"command", "moments"},
                     {"input", input_json(config, nullptr)},
                     {"order", order},
                     {"rows", body}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  const bool csv = config.format == "csv";
  if (csv) {
    os << "gamma,mean,variance,mandel_q\n";
  } else {
    os << "command: moments\n"
       << "input: " << input_text(config) << "\norder: " << order << "\n"
       << "gamma  mean  variance  mandel_q\n";
  }
  const char* sep = csv ? "," : "  ";
  for (const auto& row : rows) {
    os << format_double(row.gamma) << sep << format_double(row.summary.mean)
       << sep << format_double(row.summary.variance) << sep;
    if (row.summary.mandel_q)
      os << format_double(*row.summary.mandel_q);
    else
      os << "undefined";
    os << "\n";
  }
  return os.str();
}

InputStateWeights resolve_weights(const Config& config) {
  switch (config.kind) {
    case InputKind::coherent:
      return coherent_weights(config.mean, config.epsilon);
    case InputKind::thermal:
      return thermal_weights(config.mean, config.epsilon);
    case InputKind::weights_file:
      return load_weights_file(config.weights_path);
    default:
      throw InvalidParameter("single Fock input carries no weights");
  }
}

int cmd_expand(const Config& config, std::ostream& out, std::ostream& err) {
  if (config.kind == InputKind::fock) {
    const auto e = assemble_fock(config.fock_n, config.order);
    return write_payload(expand_payload_fock(config, e), config, out, err);
  }
  const auto mixture = assemble_mixture(resolve_weights(config), config.order);
  return write_payload(expand_payload_mixture(config, mixture), config, out,
                       err);
}

int cmd_validate(const Config& config, std::ostream& out, std::ostream& err) {
  if (config.kind != InputKind::fock) {
    err << "error: validate requires a Fock input\n";
    return 2;
  }
  const auto assembled = assemble_fock(config.fock_n, config.order);
  const auto reference = taylor_oracle(config.fock_n, config.order);
  if (const auto bad = first_mismatch(assembled.terms, reference)) {
    out << "MISMATCH at (v=" << bad->target_v << ", power="
        << bad->gamma_power << "): assembler " << rational_str(bad->assembled)
        << " vs oracle " << rational_str(bad->reference) << "\n";
    return 1;
  }
  out << "EXACT MATCH (" << reference.size() << ") coefficients\n";
  return 0;
}

int cmd_evaluate(const Config& config, std::ostream& out, std::ostream& err) {
  std::vector<EvalRow> rows;
  if (config.kind == InputKind::fock)
    rows = evaluate(assemble_fock(config.fock_n, config.order), *config.gamma);
  else
    rows = evaluate(assemble_mixture(resolve_weights(config), config.order),
                    *config.gamma);
  return write_payload(evaluate_payload(config, rows, config.order,
                                        *config.gamma),
                       config, out, err);
}

int cmd_moments(const Config& config, std::ostream& out, std::ostream& err) {
  std::vector<double> grid;
  if (config.gamma_sweep)
    grid = parse_gamma_sweep(*config.gamma_sweep);
  else
    grid.push_back(*config.gamma);

  std::vector<MomentRow> rows;
  rows.reserve(grid.size());
  if (config.kind == InputKind::fock) {
    const auto e = assemble_fock(config.fock_n, config.order);
    for (double g : grid) rows.push_back({g, moments(e, g)});
  } else {
    const auto e = assemble_mixture(resolve_weights(config), config.order);
    for (double g : grid) rows.push_back({g, moments(e, g)});
  }
  return write_payload(moments_payload(config, rows, config.order), config,
                       out, err);
}

int cmd_diagrams(const Config& config, std::ostream& out, std::ostream& err) {
  if (config.from_order % 2 != 0 || config.from_order < 0 ||
      config.from_order > config.order) {
    err << "error: --from must be even, >= 0 and <= --order\n";
    return 2;
  }

  std::vector<DiagramPair> pairs;
  for (int total = config.from_order; total <= config.order; total += 2)
    for (auto& pair : enumerate_pairs(total)) pairs.push_back(pair);

  if (!config.render_mode.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.outdir, ec);
    if (ec) {
      err << "error: cannot create output directory " << config.outdir << "\n";
      return 3;
    }
    const bool latex = config.render_mode == "latex";
    for (const auto& pair : pairs) {
      const std::string name =
          pair_slug(pair) + (latex ? ".tex" : ".txt");
      Config file_config = config;
      file_config.output_path =
          (std::filesystem::path(config.outdir) / name).string();
      const std::string body =
          latex ? render_latex(pair) : render_ascii(pair);
      if (int rc = write_payload(body, file_config, out, err)) return rc;
      out << file_config.output_path << "\n";
    }
    return 0;
  }

  // listing
  if (config.format == "json") {
    ordered_json body = ordered_json::array();
    for (const auto& pair : pairs) {
      ordered_json entry{{"R", pair.total_order()},
                         {"k", pair.left().to_string()},
                         {"kp", pair.right().to_string()},
                         {"r", pair.left_order()},
                         {"rp", pair.right_order()},
                         {"multiplicity", pair.multiplicity()},
                         {"v", net_sh_photons(pair.left())}};
      if (config.coeff_n)
        entry["coefficient"] =
            rational_json(diagram_term(pair, *config.coeff_n).coefficient);
      body.push_back(entry);
    }
    ordered_json doc{{"schema", kSchemaId},
                     {"version", kToolVersion},
                     {"command", "diagrams"},
                     {"from", config.from_order},
                     {"order", config.order},
                     {"pairs", body}};
    if (config.coeff_n) doc["n"] = *config.coeff_n;
    return write_payload(doc.dump(2) + "\n", config, out, err);
  }
  std::ostringstream os;
  const bool csv = config.format == "csv";
  if (csv) {
    os << "R,k,kp,r,rp,multiplicity,v";
    if (config.coeff_n) os << ",num,den";
    os << "\n";
  }
  for (const auto& pair : pairs) {
    if (csv) {
      os << pair.total_order() << "," << pair.left().to_string() << ","
         << pair.right().to_string() << "," << pair.left_order() << ","
         << pair.right_order() << "," << pair.multiplicity() << ","
         << net_sh_photons(pair.left());
      if (config.coeff_n) {
        const Rational c = diagram_term(pair, *config.coeff_n).coefficient;
        os << "," << boost::multiprecision::numerator(c).str() << ","
           << boost::multiprecision::denominator(c).str();
      }
      os << "\n";
    } else {
      os << "R=" << pair.total_order() << "  k=" << pair.left().to_string()
         << "  k'=" << pair.right().to_string() << "  r=" << pair.left_order()
         << "  r'=" << pair.right_order()
         << "  mult=" << pair.multiplicity()
         << "  v=" << net_sh_photons(pair.left());
      if (config.coeff_n)
        os << "  coeff="
           << rational_str(diagram_term(pair, *config.coeff_n).coefficient);
      os << "\n";
    }
  }
  return write_payload(os.str(), config, out, err);
}

void add_input_options(CLI::App* sub, Config& config) {
  auto* group = sub->add_option_group("input", "input state (exactly one)");
  group->add_option_function<int>(
           "--fock",
           [&config](int n) {
             config.kind = InputKind::fock;
             config.fock_n = n;
           },
           "pump Fock input |n,0>")
      ->check(CLI::NonNegativeNumber);
  group->add_option_function<double>(
      "--coherent",
      [&config](double mean) {
        config.kind = InputKind::coherent;
        config.mean = mean;
      },
      "coherent pump with the given mean photon number");
  group->add_option_function<double>(
      "--thermal",
      [&config](double mean) {
        config.kind = InputKind::thermal;
        config.mean = mean;
      },
      "thermal pump with the given mean photon number");
  group->add_option_function<std::string>(
      "--weights",
      [&config](std::string path) {
        config.kind = InputKind::weights_file;
        config.weights_path = std::move(path);
      },
      "JSON file with diagonal input weights");
  group->require_option(1);
}

void add_output_options(CLI::App* sub, Config& config) {
  sub->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--output", config.output_path,
                  "output file (stdout when omitted)");
  sub->add_option("--precision", config.precision,
                  "significant digits for mixture coefficients")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();
}

}  // namespace

std::optional<Mismatch> first_mismatch(
    const std::map<TermKey, Rational>& assembled,
    const std::map<TermKey, Rational>& reference) {
  auto value_of = [](const std::map<TermKey, Rational>& table,
                     const TermKey& key) {
    const auto it = table.find(key);
    return it == table.end() ? Rational(0) : it->second;
  };
  std::map<TermKey, char> keys;
  for (const auto& [key, coeff] : assembled) keys.emplace(key, 0);
  for (const auto& [key, coeff] : reference) keys.emplace(key, 0);
  for (const auto& [key, unused] : keys) {
    const Rational a = value_of(assembled, key);
    const Rational b = value_of(reference, key);
    if (a != b) return Mismatch{key.first, key.second, a, b};
  }
  return std::nullopt;
}

std::vector<double> parse_gamma_sweep(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw InvalidParameter("gamma sweep must be lo:hi:steps");
  double lo = 0.0, hi = 0.0;
  long steps = 0;
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    steps = std::stol(text.substr(second + 1));
  } catch (const std::exception&) {
    throw InvalidParameter("gamma sweep must be lo:hi:steps");
  }
  if (steps < 1) throw InvalidParameter("gamma sweep needs at least one step");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (long i = 0; i < steps; ++i)
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(steps - 1));
  return grid;
}

InputStateWeights load_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read weights file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw InvalidParameter("weights file is not valid JSON: " +
                           std::string(e.what()));
  }
  if (!doc.contains("weights") || !doc["weights"].is_array())
    throw InvalidParameter("weights file needs a \"weights\" array");
  InputStateWeights w;
  Real retained = 0;
  for (const auto& entry : doc["weights"]) {
    if (!entry.contains("n") || !entry.contains("c"))
      throw InvalidParameter("each weight needs \"n\" and \"c\"");
    const int n = entry["n"].get<int>();
    if (n < 0) throw InvalidParameter("weight n must be >= 0");
    Real c;
    if (entry["c"].is_string())
      c = Real(entry["c"].get<std::string>());
    else
      c = Real(entry["c"].get<double>());
    if (c < 0) throw InvalidParameter("weights must be nonnegative");
    w.weights.emplace_back(n, c);
    retained += c;
  }
  if (w.weights.empty()) throw InvalidParameter("weights file is empty");
  std::sort(w.weights.begin(), w.weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < w.weights.size(); ++i)
    if (w.weights[i].first == w.weights[i - 1].first)
      throw InvalidParameter("duplicate n in weights file");
  if (retained > Real(1) + Real("1e-9"))
    throw InvalidParameter("weights sum exceeds 1");
  w.cutoff_n = w.weights.back().first;
  w.tail_bound = retained < 1 ? Real(1) - retained : Real(0);
  return w;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"perturbative second-harmonic photon statistics"};
  app.require_subcommand(1);
  Config config;

  auto* expand = app.add_subcommand(
      "expand", "assemble the distribution expansion coefficients");
  add_input_options(expand, config);
  add_output_options(expand, config);
  expand->add_option("--order", config.order, "truncation order (even)")
      ->required();
  expand->add_option("--epsilon", config.epsilon, "mixture tail bound")
      ->capture_default_str();

  auto* diagrams = app.add_subcommand(
      "diagrams", "list or render canonical process superpositions");
  add_output_options(diagrams, config);
  diagrams->add_option("--order", config.order, "highest order (even)")
      ->required();
  diagrams->add_option("--from", config.from_order,
                       "lowest order to include (even)")
      ->capture_default_str();
  diagrams->add_flag("--list", config.list, "list the canonical pairs");
  diagrams->add_option("--render", config.render_mode,
                       "write one artifact per pair")
      ->check(CLI::IsMember({"ascii", "latex"}));
  diagrams->add_option("--outdir", config.outdir, "render target directory")
      ->capture_default_str();
  diagrams->add_option("--n", config.coeff_n,
                       "evaluate coefficients at this pump photon number");

  auto* validate = app.add_subcommand(
      "validate", "compare the assembler against the exact oracle");
  add_input_options(validate, config);
  validate->add_option("--order", config.order, "truncation order (even)")
      ->required();

  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "evaluate the truncated distribution at one coupling");
  add_input_options(evaluate_cmd, config);
  add_output_options(evaluate_cmd, config);
  evaluate_cmd->add_option("--order", config.order, "truncation order (even)")
      ->required();
  evaluate_cmd->add_option("--gamma", config.gamma, "coupling value");
  evaluate_cmd->add_option("--epsilon", config.epsilon, "mixture tail bound")
      ->capture_default_str();

  auto* moments_cmd = app.add_subcommand(
      "moments", "mean, variance and Mandel Q of the truncated distribution");
  add_input_options(moments_cmd, config);
  add_output_options(moments_cmd, config);
  moments_cmd->add_option("--order", config.order, "truncation order (even)")
      ->required();
  moments_cmd->add_option("--gamma", config.gamma, "coupling value");
  moments_cmd->add_option("--gamma-sweep", config.gamma_sweep,
                          "lo:hi:steps evaluation grid");
  moments_cmd->add_option("--epsilon", config.epsilon, "mixture tail bound")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help;
      const int rc = app.exit(e, help, help);
      out << help.str();
      return rc;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (config.order < 0 || config.order % 2 != 0) {
    err << "error: --order must be even and >= 0\n";
    return 2;
  }
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    err << "error: --epsilon must lie in (0,1)\n";
    return 2;
  }

  try {
    if (expand->parsed()) return cmd_expand(config, out, err);
    if (diagrams->parsed()) return cmd_diagrams(config, out, err);
    if (validate->parsed()) return cmd_validate(config, out, err);
    if (evaluate_cmd->parsed()) {
      if (!config.gamma) {
        err << "error: evaluate requires --gamma\n";
        return 2;
      }
      return cmd_evaluate(config, out, err);
    }
    if (moments_cmd->parsed()) {
      if (!config.gamma && !config.gamma_sweep) {
        err << "error: moments requires --gamma or --gamma-sweep\n";
        return 2;
      }
      return cmd_moments(config, out, err);
    }
  } catch (const std::invalid_argument& e) {
    // InvalidParameter, EmptyWeights and precondition violations
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace shg::cli
