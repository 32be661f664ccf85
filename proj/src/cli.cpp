#include "nbasis/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nbasis/error.hpp"
#include "nbasis/quadforms.hpp"
#include "nbasis/reciprocity.hpp"
#include "nbasis/siegel.hpp"

namespace nbasis::cli {

using nlohmann::ordered_json;

namespace {

constexpr long kMinPrecision = 64;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

ordered_json point_json(const QuadIrrational& x) {
  return {{"p", x.p().get_str()},
          {"q", x.q().get_str()},
          {"d", x.d().get_str()},
          {"text", x.to_string()}};
}

ordered_json form_json(const QuadForm& q) {
  return {{"a", q.a}, {"b", q.b}, {"c", q.c}};
}

ordered_json matrix_json(const MatrixModN& m) {
  return ordered_json::array({m.m11(), m.m12(), m.m21(), m.m22()});
}

ordered_json alpha_json(const WElement& w) {
  return {{"t", w.t}, {"s", w.s}, {"matrix", matrix_json(w.matrix)}};
}

ordered_json poly_json(const IntPolynomial& poly) {
  ordered_json coeffs = ordered_json::array();
  for (const BigInt& c : poly.coefficients) coeffs.push_back(c.get_str());
  return {{"degree", poly.degree()},
          {"coefficients", std::move(coeffs)},
          {"max_rounding_residual", format_real(poly.max_rounding_residual)},
          {"max_imag_residual", format_real(poly.max_imag_residual)}};
}

ordered_json criterion_json(const CriterionReport& report, long digits) {
  ordered_json ratios = ordered_json::array();
  for (const BigFloat& r : report.ratios) ratios.push_back(r.to_decimal(digits));
  ordered_json out{{"group_order", report.group_order},
                   {"ratios", std::move(ratios)},
                   {"max_ratio", report.max_ratio.to_decimal(digits)},
                   {"passes", report.passes}};
  out["m"] = report.m ? ordered_json(*report.m) : ordered_json(nullptr);
  return out;
}

ordered_json conjugates_json(const Discriminant& d, std::int64_t N,
                             const std::vector<ConjugateRecord>& records,
                             long digits) {
  ordered_json w = ordered_json::array();
  for (const WElement& e : w_group(d, N)) w.push_back(alpha_json(e));
  ordered_json betas = ordered_json::array();
  for (const QuadForm& q : reduced_forms(d)) {
    betas.push_back({{"form", form_json(q)},
                     {"matrix", matrix_json(beta_modN(q, d, N))}});
  }
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ConjugateRecord& r = records[i];
    list.push_back({{"index", i + 1},
                    {"alpha", alpha_json(r.index.alpha)},
                    {"form", form_json(r.index.form)},
                    {"vector", ordered_json::array({r.vector.v(), r.vector.w()})},
                    {"point", point_json(r.point)},
                    {"value", r.value.to_decimal(digits)}});
  }
  return {{"group_order", records.size()},
          {"w_group", std::move(w)},
          {"beta", std::move(betas)},
          {"conjugates", std::move(list)}};
}

std::int64_t require_level(const RunConfig& config) {
  if (!config.level) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(to_string(config.subcommand)) +
                    " requires the level -N");
  }
  if (*config.level < 2 || *config.level >= kMaxLevel) {
    throw Error(ErrorKind::kInvalidArgument,
                "level N must be in [2, 2^31), got " +
                    std::to_string(*config.level));
  }
  return *config.level;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPrecisionUnachievable:
    case ErrorKind::kDegenerateValue:
    case ErrorKind::kSnapFailure:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

void flatten(const ordered_json& node, const std::string& path,
             std::ostream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, os);
    }
  } else if (node.is_array()) {
    if (node.empty()) os << path << " = []\n";
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", os);
    }
  } else if (node.is_string()) {
    os << path << " = " << node.get<std::string>() << "\n";
  } else {
    os << path << " = " << node.dump() << "\n";
  }
}

}  // namespace

std::string_view to_string(Subcommand s) {
  switch (s) {
    case Subcommand::kForms: return "forms";
    case Subcommand::kConjugates: return "conjugates";
    case Subcommand::kNormalBasis: return "normal-basis";
    case Subcommand::kMinpoly: return "minpoly";
    case Subcommand::kInvariant: return "invariant";
  }
  return "unknown";
}

ordered_json build_report(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.precision.bits < kMinPrecision) {
    throw Error(ErrorKind::kInvalidArgument,
                "precision must be at least 64 bits");
  }
  if (config.precision.guard < 0) {
    throw Error(ErrorKind::kInvalidArgument, "guard bits must be nonnegative");
  }
  if (!(config.snap_tolerance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "snap tolerance must be positive");
  }
  const Discriminant d = validate_discriminant(config.disc);
  const long digits = decimal_digits_for(config.precision.bits);

  ordered_json cfg{{"disc", config.disc}};
  if (config.subcommand != Subcommand::kForms) cfg["N"] = require_level(config);
  cfg["precision"] = config.precision.bits;
  cfg["guard"] = config.precision.guard;
  cfg["snap_tolerance"] = format_real(config.snap_tolerance);
  cfg["format"] = config.format == OutputFormat::kJson ? "json" : "text";

  ordered_json result;
  switch (config.subcommand) {
    case Subcommand::kForms: {
      const std::vector<QuadForm> forms = reduced_forms(d);
      const ThetaPoly poly = theta_min_poly(d);
      ordered_json list = ordered_json::array();
      for (const QuadForm& q : forms) {
        ordered_json f = form_json(q);
        f["point"] = point_json(theta_of_form(q, d));
        list.push_back(std::move(f));
      }
      result = {{"class_number", forms.size()},
                {"theta", point_json(theta(d))},
                {"theta_min_poly", {{"B", poly.B}, {"C", poly.C}}},
                {"forms", std::move(list)}};
      break;
    }
    case Subcommand::kConjugates:
    case Subcommand::kNormalBasis: {
      const std::int64_t N = *config.level;
      const auto records = conjugates(d, N, config.precision, config.threads);
      result = conjugates_json(d, N, records, digits);
      if (config.subcommand == Subcommand::kNormalBasis) {
        result["criterion"] = criterion_json(check_criterion(records), digits);
      }
      break;
    }
    case Subcommand::kMinpoly: {
      const std::int64_t N = *config.level;
      const auto records = conjugates(d, N, config.precision, config.threads);
      result = poly_json(minimal_polynomial(records, config.snap_tolerance));
      if (config.expand_power) {
        const CriterionReport report = check_criterion(records);
        if (!report.passes) {
          throw Error(ErrorKind::kDegenerateValue,
                      "criterion fails; no exponent m to expand");
        }
        result["m"] = *report.m;
        const auto powers = power_values(records, *report.m);
        result["power_polynomial"] =
            poly_json(minimal_polynomial(powers, config.snap_tolerance));
      }
      break;
    }
    case Subcommand::kInvariant: {
      const std::int64_t N = *config.level;
      const BigComplex value =
          siegel_ramachandra_invariant(d, N, config.precision);
      result = {{"exponent", power_exponent(PowerKind::kRamachandra, N)},
                {"value", value.to_decimal(digits)}};
      break;
    }
  }

  ordered_json report{{"schema", kSchemaVersion},
                      {"command", std::string(to_string(config.subcommand))},
                      {"config", std::move(cfg)},
                      {"result", std::move(result)}};
  if (config.timing) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    report["timing_ms"] = format_real(elapsed.count());
  }
  return report;
}

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ordered_json report = build_report(config);
    if (config.format == OutputFormat::kJson) {
      out << report.dump(2) << "\n";
    } else {
      out << render_text(report);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Galois conjugates, normal-basis certificates and minimal "
               "polynomials of singular Siegel function values"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  const std::pair<Subcommand, const char*> commands[] = {
      {Subcommand::kForms, "list the reduced forms of discriminant d"},
      {Subcommand::kConjugates, "evaluate all conjugates of x"},
      {Subcommand::kNormalBasis, "check the normal-basis criterion for x"},
      {Subcommand::kMinpoly, "integer minimal polynomial of x"},
      {Subcommand::kInvariant, "Siegel-Ramachandra invariant g(0,1/N)(theta)^12N"},
  };
  for (const auto& [kind, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(kind)), help);
    sub->add_option("--disc,-d", config.disc, "fundamental discriminant d < 0")
        ->required();
    if (kind != Subcommand::kForms) {
      sub->add_option("-N,--level", config.level, "level N >= 2")->required();
    }
    sub->add_option("--precision,-p", config.precision.bits,
                    "result precision in bits (>= 64)")
        ->capture_default_str();
    sub->add_option("--guard", config.precision.guard, "guard bits")
        ->capture_default_str();
    sub->add_option("--snap-tol", config.snap_tolerance,
                    "absolute tolerance for integer snapping")
        ->capture_default_str();
    sub->add_option("--format,-f", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--threads,-j", config.threads,
                    "worker threads for conjugate evaluation (0 = all cores)");
    sub->add_flag("--timing", config.timing, "include wall-clock timing");
    if (kind == Subcommand::kMinpoly) {
      sub->add_flag("--expand-power", config.expand_power,
                    "also expand the polynomial of x^m");
    }
    sub->callback([&config, kind = kind] { config.subcommand = kind; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  config.format = format == "text" ? OutputFormat::kText : OutputFormat::kJson;
  return run(config, out, err);
}

}  // namespace nbasis::cli
