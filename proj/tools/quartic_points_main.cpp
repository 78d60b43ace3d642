// Command-line front end: computes and classifies the quadratic points on
// the Fermat quartic x^4 + y^4 = 1 over a chosen number field, assuming both
// curves y^2 = x^3 +- 4x have rank zero there.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qp/catalog.hpp"
#include "qp/reference.hpp"
#include "qp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecision = 3;

struct FieldArgs {
  std::string preset;
  std::string field_coeffs;
  bool assume_rank_zero = false;
};

struct OutputArgs {
  std::string format = "text";  // text | json
  std::string out_path;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--preset", args.preset,
                  "Built-in field: Q, Qi, Qsqrt2, Qzeta8, Qalpha");
  cmd->add_option(
      "--field", args.field_coeffs,
      "Minimal polynomial over Q as comma-separated rational coefficients, "
      "constant term first; a trailing 1 is taken as the (monic) leading "
      "coefficient, otherwise monic is implied");
  cmd->add_flag("--assume-rank-zero", args.assume_rank_zero,
                "Declare rank E1(K) = rank E2(K) = 0 for a field outside the "
                "bundled catalog");
}

void add_output_options(CLI::App* cmd, OutputArgs& args) {
  cmd->add_option("--format", args.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", args.out_path, "Write the report to a file");
}

qp::RatPoly parse_field_coeffs(const std::string& spec) {
  std::vector<qp::Rational> coeffs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = qp::Rational::parse(item);
    if (!r) throw qp::InputError("cannot parse coefficient '" + item + "'");
    coeffs.push_back(*r);
  }
  if (coeffs.empty()) throw qp::InputError("empty field specification");
  if (!(coeffs.size() >= 2 && coeffs.back().is_one()))
    coeffs.push_back(qp::Rational(1));  // monic implied
  return qp::RatPoly(std::move(coeffs));
}

qp::FieldPtr resolve_field(const FieldArgs& args) {
  if (!args.preset.empty() && !args.field_coeffs.empty())
    throw qp::InputError("--preset and --field are mutually exclusive");
  if (!args.preset.empty()) return qp::NumberField::preset(args.preset);
  if (args.field_coeffs.empty())
    throw qp::InputError("one of --preset or --field is required");

  qp::RatPoly minpoly = parse_field_coeffs(args.field_coeffs);
  auto entry = qp::catalog_lookup(minpoly);
  if (!entry && !args.assume_rank_zero)
    throw qp::InputError(
        "field is not in the verified rank-zero catalog; pass "
        "--assume-rank-zero to declare the hypothesis");
  std::string label = entry && entry->preset ? entry->name : "";
  return qp::NumberField::create(std::move(minpoly), std::move(label));
}

void emit(const OutputArgs& out, const std::string& payload) {
  if (out.out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out.out_path);
  if (!f) throw qp::InputError("cannot open output file " + out.out_path);
  f << payload;
  if (payload.empty() || payload.back() != '\n') f << "\n";
}

std::string json_dump(const qp::Json& j) {
  return j.dump(2);
}

int run_compute(const FieldArgs& fa, const OutputArgs& oa, bool count_only) {
  auto field = resolve_field(fa);
  qp::Gamma2Report report = qp::compute_gamma2(field);
  if (count_only) {
    if (oa.format == "json") {
      qp::Json j;
      j["field"] = qp::field_to_json(*field);
      j["gamma2_count"] = report.gamma2_count;
      emit(oa, json_dump(j));
    } else {
      emit(oa, std::to_string(report.gamma2_count));
    }
    return kExitOk;
  }
  if (oa.format == "json")
    emit(oa, json_dump(qp::report_to_json(report)));
  else
    emit(oa, qp::report_to_text(report));
  return kExitOk;
}

int run_torsion(const FieldArgs& fa, const OutputArgs& oa) {
  auto field = resolve_field(fa);
  auto e1 = qp::ec_torsion(qp::curve_e1(field));
  auto e2 = qp::ec_torsion(qp::curve_e2(field));
  if (oa.format == "json") {
    qp::Json j;
    j["field"] = qp::field_to_json(*field);
    j["E1"] = qp::torsion_to_json(e1);
    j["E2"] = qp::torsion_to_json(e2);
    emit(oa, json_dump(j));
  } else {
    emit(oa, qp::torsion_pair_to_text(e1, e2));
  }
  return kExitOk;
}

int run_identify(const FieldArgs& fa, const OutputArgs& oa) {
  auto field = resolve_field(fa);
  emit(oa, qp::identify_l(field));
  return kExitOk;
}

int run_verify_paper(const OutputArgs& oa) {
  auto checks = qp::reference::run_all_checks();
  std::ostringstream os;
  int failures = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
    if (!c.pass) ++failures;
  }
  os << (failures == 0 ? "all checks passed" : "failing checks: " + std::to_string(failures))
     << " (" << checks.size() - failures << "/" << checks.size() << ")\n";
  emit(oa, os.str());
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quadratic points on the Fermat quartic x^4 + y^4 = 1 over number "
      "fields with rank-zero inputs"};
  app.require_subcommand(1);

  FieldArgs fa;
  OutputArgs oa;

  CLI::App* compute = app.add_subcommand(
      "compute", "Full census: torsion, both scan steps, S0 and the count");
  add_field_options(compute, fa);
  add_output_options(compute, oa);

  CLI::App* count = app.add_subcommand("count", "Only |Gamma_2(F4, K)|");
  add_field_options(count, fa);
  add_output_options(count, oa);

  CLI::App* torsion = app.add_subcommand(
      "torsion", "Torsion subgroups of y^2 = x^3 + 4x and y^2 = x^3 - 4x over K");
  add_field_options(torsion, fa);
  add_output_options(torsion, oa);

  CLI::App* identify = app.add_subcommand(
      "identify-L", "Largest built-in field embeddable in K");
  add_field_options(identify, fa);
  add_output_options(identify, oa);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "Re-derive the bundled reference tables for the five "
                      "built-in fields and compare exactly");
  add_output_options(verify, oa);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(fa, oa, false);
    if (count->parsed()) return run_compute(fa, oa, true);
    if (torsion->parsed()) return run_torsion(fa, oa);
    if (identify->parsed()) return run_identify(fa, oa);
    if (verify->parsed()) return run_verify_paper(oa);
  } catch (const qp::InputError& e) {
    std::cerr << R"({"error":"input","what":")" << e.what() << "\"}\n";
    return kExitInputError;
  } catch (const qp::PrecisionExhausted& e) {
    std::cerr << R"({"error":"precision_exhausted","what":")" << e.what() << "\"}\n";
    return kExitPrecision;
  } catch (const qp::IncompleteRoots& e) {
    std::cerr << R"({"error":"incomplete_roots","what":")" << e.what() << "\"}\n";
    return kExitPrecision;
  } catch (const qp::Inconclusive& e) {
    std::cerr << R"({"error":"inconclusive","what":")" << e.what() << "\"}\n";
    return kExitPrecision;
  } catch (const qp::NonConvergence& e) {
    std::cerr << R"({"error":"non_convergence","what":")" << e.what() << "\"}\n";
    return kExitPrecision;
  } catch (const qp::Error& e) {
    std::cerr << R"({"error":"internal","what":")" << e.what() << "\"}\n";
    return kExitPrecision;
  }
  return kExitInputError;
}
