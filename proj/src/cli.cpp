#include "cevia/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "cevia/error.hpp"
#include "cevia/plot.hpp"
#include "cevia/report.hpp"

namespace cevia {

namespace {

struct Options {
  bool pretty = false;

  std::vector<std::string> point;
  std::string a;
  std::string j0;
  std::string precision = "1/10000000000";

  std::string xmin = "-5";
  std::string xmax = "5";
  double ymin = -5.0;
  double ymax = 5.0;
  std::size_t plot_samples = 401;
  std::string format = "svg";
  std::string output;

  bool text = false;

  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  bool inject_fault = false;
};

void emit(std::ostream& out, const Json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const BaryPoint p(Rational::parse(o.point[0]), Rational::parse(o.point[1]),
                    Rational::parse(o.point[2]));
  const DegeneracyFlags flags = classify(p);
  if (flags.blocks_report()) {
    const std::string why = flags.degenerate() ? "P lies on a side of ABC or of its anticomplementary triangle"
                                               : "Z is undefined for P on all three medians";
    emit(out, degenerate_report(p, flags, why), o.pretty);
    err << "cevia: degenerate point " << p.str() << '\n';
    return kExitDegenerate;
  }
  const CevianContext ctx(p);
  emit(out, construction_report(ctx), o.pretty);
  return kExitOk;
}

int cmd_curve_info(const Options& o, std::ostream& out) {
  const Curve curve(Rational::parse(o.a));
  emit(out, curve_report(curve), o.pretty);
  return kExitOk;
}

int cmd_j_invert(const Options& o, std::ostream& out) {
  const Rational j0 = Rational::parse(o.j0);
  const Rational prec = Rational::parse(o.precision);
  if (prec.sign() <= 0) throw Error(Errc::ParseError, "--prec must be positive");
  Json j;
  j["j"] = j0.str();
  j["precision"] = prec.str();
  j["roots"] = intervals_report(j_invert(j0, prec));
  emit(out, j, o.pretty);
  return kExitOk;
}

int cmd_plot(const Options& o, std::ostream& out, std::ostream& err) {
  const Rational a = Rational::parse(o.a);
  const PlotWindow window{Rational::parse(o.xmin), Rational::parse(o.xmax), o.ymin, o.ymax,
                          o.plot_samples};
  const PlotData data = sample_curve(a, window);
  const std::string body = o.format == "csv" ? plot_csv(data) : plot_svg(data, window);
  if (o.output.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << body) || !file.flush()) {
    err << "cevia: cannot write " << o.output << '\n';
    return kExitIo;
  }
  Json j;
  j["a"] = a.str();
  j["format"] = o.format;
  j["output"] = o.output;
  j["samples"] = data.rows.size() + data.poles;
  j["rows"] = data.rows.size();
  j["poles"] = data.poles;
  j["empty"] = data.empty;
  emit(out, j, o.pretty);
  return kExitOk;
}

void print_table_text(const Curve& curve, std::ostream& out) {
  const TorsionTable t = torsion_table(curve);
  const auto& labels = Curve::torsion_labels();
  out << "E_a, a = " << curve.a().str() << "; identity " << labels[static_cast<std::size_t>(t.identity)]
      << (t.cyclic ? "; cyclic of order 6" : "; not cyclic") << '\n';
  out << std::setw(7) << "+";
  for (const auto& l : labels) out << std::setw(7) << l;
  out << '\n';
  for (std::size_t i = 0; i < 6; ++i) {
    out << std::setw(7) << labels[i];
    for (int v : t.sum[i]) out << std::setw(7) << (v < 0 ? std::string_view("?") : labels[static_cast<std::size_t>(v)]);
    out << '\n';
  }
}

int cmd_group_table(const Options& o, std::ostream& out) {
  const Curve curve(Rational::parse(o.a));
  if (o.text) {
    print_table_text(curve, out);
  } else {
    emit(out, torsion_table_report(curve), o.pretty);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.samples < 1) throw Error(Errc::ParseError, "--samples must be at least 1");
  if (!(o.tolerance > 0.0)) throw Error(Errc::ParseError, "--tolerance must be positive");
  const VerifyReport report = run_verification({o.samples, o.seed, o.tolerance, o.inject_fault});
  emit(out, verify_report(report), o.pretty);
  for (const auto& t : report.tallies) {
    if (t.failed != 0) err << "cevia: " << t.name << " failed " << t.failed << "x; first at " << t.first_failure << '\n';
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CEVIA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("CEVIA_SEED is not an integer: '") + env + "'");
    }
  }
  return 1;
}

bool usage_error(Errc code) {
  return code == Errc::ParseError || code == Errc::DivisionByZero || code == Errc::ZeroVector;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cevian constructions and the elliptic family E_a", "cevia"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* construct = app.add_subcommand("construct", "Report every point built from P = (x, y, z)");
  construct->add_option("coords", o.point, "Barycentric coordinates x y z")->expected(3)->required();

  auto* curve_info = app.add_subcommand("curve-info", "Invariants of the curve E_a");
  curve_info->add_option("a", o.a, "Curve parameter")->required();

  auto* j_inv = app.add_subcommand("j-invert", "Every real a with j(E_a) = j0");
  j_inv->add_option("j0", o.j0, "Target j-invariant")->required();
  j_inv->add_option("--prec", o.precision, "Interval width bound")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Sample the affine normal form of E_a");
  plot->add_option("a", o.a, "Curve parameter")->required();
  plot->add_option("--xmin", o.xmin, "Left end of the x window")->capture_default_str();
  plot->add_option("--xmax", o.xmax, "Right end of the x window")->capture_default_str();
  plot->add_option("--ymin", o.ymin, "Bottom of the y window")->capture_default_str();
  plot->add_option("--ymax", o.ymax, "Top of the y window")->capture_default_str();
  plot->add_option("--samples", o.plot_samples, "Number of x samples")->capture_default_str();
  plot->add_option("--format", o.format, "svg or csv")->capture_default_str()->check(CLI::IsMember({"svg", "csv"}));
  plot->add_option("-o,--output", o.output, "Output file (stdout when omitted)");

  auto* group = app.add_subcommand("group-table", "Addition table of the six torsion points");
  group->add_option("a", o.a, "Curve parameter")->required();
  group->add_flag("--text", o.text, "Print an aligned grid instead of JSON");

  auto* verify = app.add_subcommand("verify", "Check every identity on seeded random samples");
  verify->add_option("--samples", o.samples, "Number of samples")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed (default: $CEVIA_SEED or 1)");
  verify->add_option("--tolerance", o.tolerance, "Numeric cross-check tolerance")->capture_default_str();
  verify->add_flag("--inject-fault", o.inject_fault)->group("");

  try {
    o.seed = default_seed();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "cevia: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o, out, err);
    if (*curve_info) return cmd_curve_info(o, out);
    if (*j_inv) return cmd_j_invert(o, out);
    if (*plot) return cmd_plot(o, out, err);
    if (*group) return cmd_group_table(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "cevia: " << e.what() << '\n';
    return usage_error(e.code()) ? kExitUsage : kExitDegenerate;
  }
  return kExitUsage;
}

}  // namespace cevia
