#include "egfasym/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "egfasym/asymptotics.hpp"
#include "egfasym/error.hpp"
#include "egfasym/numerics.hpp"
#include "egfasym/oeis.hpp"
#include "egfasym/params.hpp"
#include "egfasym/richardson.hpp"
#include "egfasym/saddle.hpp"
#include "egfasym/series.hpp"
#include "json.hpp"

namespace egfasym::cli {

namespace {

using nlohmann::json;

enum class OutFormat { Csv, Jsonl, Table };

struct ParamFlags {
  std::string m, b, d, r, s;
  std::string anum;

  bool any_explicit() const { return !m.empty() || !b.empty() || !d.empty() || !r.empty() || !s.empty(); }
};

struct RunConfig {
  ParamFlags param_flags;
  int digits = 64;
  std::size_t terms = 20;
  std::string formula = "full";
  std::string orders;
  std::string out = "table";
  std::string mode = "exact";
  std::vector<std::uint64_t> n_list;
  std::string bfile_path;
  std::int64_t offset = 0;
  std::string cache_dir;
  std::string base_url;
  unsigned jobs = 1;
  bool full_scale = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
  cmd->add_option("--m", p.m, "coefficient of e^{bx} (rational: p/q, integer or decimal)");
  cmd->add_option("--b", p.b, "rate of the dominant exponential");
  cmd->add_option("--d", p.d, "rate of the secondary exponential");
  cmd->add_option("--r", p.r, "coefficient of e^{dx}");
  cmd->add_option("--s", p.s, "additive constant");
}

EgfParams resolve_params(const ParamFlags& p, std::ostream& err) {
  std::optional<EgfParams> out;
  if (p.any_explicit()) {
    if (p.m.empty() || p.b.empty() || p.d.empty() || p.r.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--m, --b, --d and --r are all required (--s defaults to 0)");
    }
    out = validate(parse_rational(p.m), parse_rational(p.b), parse_rational(p.d), parse_rational(p.r),
                   parse_rational(p.s.empty() ? "0" : p.s));
  } else if (!p.anum.empty()) {
    const auto fam = find_family(p.anum);
    if (!fam) {
      throw Error(ErrorKind::InvalidArgument,
                  "no built-in parameters for " + p.anum + "; pass --m --b --d --r --s");
    }
    out = fam->params;
  } else {
    throw Error(ErrorKind::InvalidArgument, "parameters required: --m --b --d --r [--s] or --oeis");
  }
  if (out->outside_worked_examples()) {
    err << "note: non-integer b or d is outside the worked examples\n";
  }
  return *out;
}

OutFormat parse_out(const std::string& s) {
  if (s == "csv") return OutFormat::Csv;
  if (s == "jsonl") return OutFormat::Jsonl;
  return OutFormat::Table;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveM:
    case ErrorKind::OrderViolation:
    case ErrorKind::ZeroR:
    case ErrorKind::InvalidNumber:
    case ErrorKind::FullFormulaRequired:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidAnum:
    case ErrorKind::OrderTooLarge:
    case ErrorKind::CapacityExceeded:
      return kExitUsage;
    default:
      return kExitComputation;
  }
}

void print_regime_hint(const Error& e, const EgfParams* params, std::ostream& err) {
  if (e.kind() == ErrorKind::FullFormulaRequired && params) {
    err << "regime " << to_string(classify_regime(*params))
        << ": the simplified formula needs b/d >= 2; use --formula full or --formula hayman\n";
  }
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EgfParams params = resolve_params(cfg.param_flags, err);
  const CoeffMode mode = cfg.mode == "float" ? CoeffMode::floating(cfg.digits) : CoeffMode::exact();
  const CoeffTable table = egf_coefficients(params, cfg.terms, mode);
  switch (parse_out(cfg.out)) {
    case OutFormat::Csv: write_csv(out, table); break;
    case OutFormat::Jsonl: write_jsonl(out, table); break;
    case OutFormat::Table:
      for (std::size_t n = 0; n < table.size(); ++n) out << n << ' ' << table.value_string(n) << '\n';
      break;
  }
  if (sgn(table.prefactor_exponent()) != 0) {
    err << "note: values are normalized to a(0)=1; multiply by e^(" << table.prefactor_exponent().get_str()
        << ")\n";
  }
  return kExitOk;
}

int cmd_asymp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EgfParams params = resolve_params(cfg.param_flags, err);
  const Formula formula = parse_formula(cfg.formula);
  const PrecisionContext ctx(cfg.digits);
  if (cfg.n_list.empty()) throw Error(ErrorKind::InvalidArgument, "--n is required");
  try {
    const OutFormat fmt = parse_out(cfg.out);
    if (fmt == OutFormat::Csv) out << "n,formula,z,log10_value,value\n";
    for (std::uint64_t n : cfg.n_list) {
      const AsympEstimate est = estimate(params, n, formula, ctx);
      const std::string z = est.z.to_string(ctx.digits());
      const std::string l10 = est.log10_value().to_string(ctx.digits());
      const std::string value = est.rendered();
      switch (fmt) {
        case OutFormat::Csv:
          out << n << ',' << to_string(formula) << ',' << z << ',' << l10 << ',' << value << '\n';
          break;
        case OutFormat::Jsonl:
          out << json{{"n", n}, {"formula", to_string(formula)}, {"z", z}, {"log10_value", l10}, {"value", value}}.dump()
              << '\n';
          break;
        case OutFormat::Table:
          out << n << ' ' << to_string(formula) << " z=" << z << " log10=" << l10 << " value=" << value << '\n';
          break;
      }
    }
  } catch (const Error& e) {
    print_regime_hint(e, &params, err);
    throw;
  }
  return kExitOk;
}

void emit_report(const ExtrapolationReport& report, OutFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutFormat::Csv:
      out << "order,extrapolant\n";
      for (std::size_t i = 0; i < report.orders.size(); ++i) {
        out << report.orders[i] << ',' << report.extrapolants[i].to_string(report.ctx.digits()) << '\n';
      }
      break;
    case OutFormat::Jsonl:
      for (std::size_t i = 0; i < report.orders.size(); ++i) {
        out << json{{"order", report.orders[i]}, {"extrapolant", report.extrapolants[i].to_string(report.ctx.digits())}}
                   .dump()
            << '\n';
      }
      break;
    case OutFormat::Table:
      write_report(out, report);
      break;
  }
}

std::vector<unsigned> orders_or_default(const std::string& text, std::size_t terms) {
  if (!text.empty()) return parse_orders(text);
  std::vector<unsigned> out;
  for (unsigned m = 10; m <= 80 && m <= terms; m *= 2) out.push_back(m);
  if (out.empty()) out.push_back(1);
  return out;
}

PrecisionContext extrapolation_context(int user_digits, const std::vector<unsigned>& orders) {
  const unsigned top = *std::max_element(orders.begin(), orders.end());
  return PrecisionContext(std::max({64, user_digits, 2 * static_cast<int>(top)}));
}

int cmd_extrapolate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EgfParams params = resolve_params(cfg.param_flags, err);
  const Formula formula = parse_formula(cfg.formula);
  const auto orders = orders_or_default(cfg.orders, cfg.terms);
  const PrecisionContext ctx = extrapolation_context(cfg.digits, orders);
  const CoeffMode mode = cfg.mode == "exact" ? CoeffMode::exact() : CoeffMode::floating(ctx.digits());
  try {
    const CoeffTable table = egf_coefficients(params, cfg.terms, mode);
    const RatioSeries series = ratio_series(table, formula, ctx, cfg.param_flags.anum, cfg.jobs);
    const OutFormat fmt = parse_out(cfg.out);
    if (fmt == OutFormat::Table) {
      out << "# ratio a(n)/estimate, formula " << to_string(formula) << ", L=" << series.length() << '\n';
      out << "# f(L) " << series.ratios.back().to_string(40) << '\n';
    }
    emit_report(extrapolation_table(series.ratios, orders, ctx.with_digits(std::max(40, 16))), fmt, out);
  } catch (const Error& e) {
    print_regime_hint(e, &params, err);
    throw;
  }
  return kExitOk;
}

int cmd_verify(RunConfig cfg, std::ostream& out, std::ostream& err) {
  if (cfg.full_scale) {
    cfg.terms = 10000;
    if (cfg.orders.empty()) cfg.orders = "100:1000:100";
  }
  const EgfParams params = resolve_params(cfg.param_flags, err);
  const Formula formula = parse_formula(cfg.formula);
  if (formula == Formula::Simplified) {
    try {
      correction_constant(params);
    } catch (const Error& e) {
      print_regime_hint(e, &params, err);
      throw;
    }
  }
  const auto orders = orders_or_default(cfg.orders, cfg.terms);
  const PrecisionContext ctx = extrapolation_context(cfg.digits, orders);
  const std::string label = cfg.param_flags.anum.empty() ? std::string("custom") : cfg.param_flags.anum;
  const OutFormat fmt = parse_out(cfg.out);
  int status = kExitOk;

  out << "# sequence " << label << " (" << params.describe() << ", regime " << to_string(classify_regime(params))
      << ")\n";

  // (1) exact coefficients
  const CoeffTable table = egf_coefficients(params, cfg.terms, CoeffMode::exact());
  out << "# coefficients a(0.." << cfg.terms << ") exact\n";

  // (2) reference comparison
  std::optional<BFile> bfile;
  try {
    if (!cfg.bfile_path.empty()) {
      std::ifstream in(cfg.bfile_path, std::ios::binary);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + cfg.bfile_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      bfile = parse_bfile(ss.str(), label);
    } else if (!cfg.param_flags.anum.empty()) {
      FetchOptions fo;
      if (!cfg.cache_dir.empty()) fo.cache_dir = cfg.cache_dir;
      if (!cfg.base_url.empty()) fo.base_url = cfg.base_url;
      bfile = fetch_bfile(cfg.param_flags.anum, fo);
    }
  } catch (const Error& e) {
    err << "b-file stage failed: " << e.what() << '\n';
    status = kExitComputation;
  }
  if (bfile) {
    const std::int64_t last_needed = static_cast<std::int64_t>(cfg.terms) + cfg.offset;
    const std::int64_t last = std::min(last_needed, bfile->last_index());
    const std::int64_t count = last - std::max<std::int64_t>(cfg.offset, bfile->first_index()) + 1;
    if (cfg.offset < bfile->first_index() || count <= 0) {
      err << "b-file stage failed: b-file indices " << bfile->first_index() << ".." << bfile->last_index()
          << " do not cover offset " << cfg.offset << '\n';
      status = kExitComputation;
    } else {
      const auto report = compare_prefix(table, *bfile, static_cast<std::size_t>(count), cfg.offset);
      out << "# b-file " << bfile->anum << " indices " << bfile->first_index() << ".." << bfile->last_index()
          << ": matched " << report.matched << " of " << count;
      if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        out << ", first mismatch at index " << mm.index << " (expected " << mm.expected << ", got " << mm.got
            << ")\n";
        status = kExitMismatch;
      } else {
        out << ", no mismatch\n";
      }
    }
  } else if (status == kExitOk) {
    out << "# no b-file requested; comparison skipped\n";
  }

  // (3) ratio series, (4) extrapolation
  try {
    const RatioSeries series = ratio_series(table, formula, ctx, label, cfg.jobs);
    out << "# ratio a(n)/estimate, formula " << to_string(formula) << ", L=" << series.length() << ", f(L) "
        << series.ratios.back().to_string(40) << '\n';
    emit_report(extrapolation_table(series.ratios, orders, ctx.with_digits(40)), fmt, out);
  } catch (const Error& e) {
    err << "extrapolation stage failed: " << e.what() << '\n';
    if (status == kExitOk) status = exit_code_for(e.kind());
  }
  return status;
}

constexpr const char* kFooter = R"(Output columns:
  coeffs       csv: n,value            (exact integers or p/q; float mode: significant digits)
  asymp        csv: n,formula,z,log10_value,value   (value is <mantissa>e<exponent>)
  extrapolate  csv: order,extrapolant
  verify       '#' report lines followed by the extrapolation table (order,extrapolant)
  jsonl emits one object per row with big numbers as strings.
Environment: OEIS_BASE_URL (default https://oeis.org), EGF_CACHE_DIR (b-file cache root).
Exit codes: 0 ok, 1 computational failure, 2 usage/validation, 3 verification mismatch.)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficients and saddle-point asymptotics of exp(m e^{bx} + r e^{dx} + s)", "egfasym"};
  app.footer(kFooter);
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* cmd) {
    add_param_flags(cmd, cfg.param_flags);
    cmd->add_option("--digits", cfg.digits, "significant decimal digits (>= 16)")->check(CLI::Range(16, 100000));
    cmd->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"csv", "jsonl", "table"}));
  };

  auto* coeffs = app.add_subcommand("coeffs", "print a(0..terms)");
  common(coeffs);
  coeffs->add_option("--oeis", cfg.param_flags.anum, "use built-in parameters of a named sequence");
  coeffs->add_option("--terms", cfg.terms, "largest index")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));

  auto* asymp = app.add_subcommand("asymp", "evaluate an asymptotic formula at n");
  common(asymp);
  asymp->add_option("--oeis", cfg.param_flags.anum, "use built-in parameters of a named sequence");
  asymp->add_option("--n", cfg.n_list, "indices (repeatable or comma separated)")->delimiter(',');
  asymp->add_option("--formula", cfg.formula, "full | simplified | hayman")
      ->check(CLI::IsMember({"full", "simplified", "hayman"}));

  auto* extrap = app.add_subcommand("extrapolate", "ratio series and Richardson table without reference data");
  common(extrap);
  extrap->add_option("--oeis", cfg.param_flags.anum, "use built-in parameters of a named sequence");
  extrap->add_option("--terms", cfg.terms, "series length L")->check(CLI::PositiveNumber);
  extrap->add_option("--orders", cfg.orders, "lo:hi:step or comma list");
  extrap->add_option("--formula", cfg.formula, "full | simplified | hayman")
      ->check(CLI::IsMember({"full", "simplified", "hayman"}));
  extrap->add_option("--mode", cfg.mode, "coefficient mode, exact or float")->check(CLI::IsMember({"exact", "float"}));
  extrap->add_option("--jobs", cfg.jobs, "worker threads for the ratio series")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "compare against a b-file, then extrapolate the ratio series");
  common(verify);
  verify->add_option("--oeis", cfg.param_flags.anum, "sequence id (A + 6 digits)");
  verify->add_option("--bfile", cfg.bfile_path, "read the reference b-file from a local path");
  verify->add_option("--terms", cfg.terms, "compute a(0..terms)")->check(CLI::PositiveNumber);
  verify->add_option("--orders", cfg.orders, "lo:hi:step or comma list");
  verify->add_option("--formula", cfg.formula, "full | simplified | hayman")
      ->check(CLI::IsMember({"full", "simplified", "hayman"}));
  verify->add_option("--offset", cfg.offset, "compare a(k) with b-file index k + offset");
  verify->add_option("--cache-dir", cfg.cache_dir, "b-file cache root (default $EGF_CACHE_DIR)");
  verify->add_option("--base-url", cfg.base_url, "OEIS base URL (default $OEIS_BASE_URL or https://oeis.org)");
  verify->add_option("--jobs", cfg.jobs, "worker threads for the ratio series")->check(CLI::PositiveNumber);
  verify->add_flag("--full-scale", cfg.full_scale, "10000 terms, orders 100:1000:100 (hours)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return kExitUsage;
  }

  try {
    if (cfg.param_flags.anum.size() && !is_valid_anum(cfg.param_flags.anum)) {
      throw Error(ErrorKind::InvalidAnum, "'" + cfg.param_flags.anum + "' is not A + 6 digits");
    }
    if (coeffs->parsed()) return cmd_coeffs(cfg, out, err);
    if (asymp->parsed()) return cmd_asymp(cfg, out, err);
    if (extrap->parsed()) return cmd_extrapolate(cfg, out, err);
    if (verify->parsed()) {
      if (cfg.terms == 20 && verify->count("--terms") == 0) cfg.terms = 2000;
      return cmd_verify(cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace egfasym::cli
