// eqeta: exact equivariant eta invariants of homogeneous spaces.
//
//   eqeta --spec FILE [--degree N] [--direction a1,a2,...] [--verify] [--output FILE]
//   eqeta sphere --n N --direction a1,... [--degree N] [--operator dirac|signature]
//   eqeta character --group D2 --kappa k1,... --direction a1,... [--degree N]
//
// Exit status: 0 success, 2 invalid input or failed validation, 3 computation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eqeta/characters.hpp"
#include "eqeta/computation_spec.hpp"
#include "eqeta/errors.hpp"
#include "eqeta/eta_engine.hpp"
#include "eqeta/sphere_models.hpp"

using namespace eqeta;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

QVector parse_list(const std::string& text) {
  QVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::ParseError, "empty entry in '" + text + "'");
    v.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "eqeta: cannot write '" << output << "'\n";
    std::cout << text;
    return;
  }
  out << text;
}

int exit_code(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::ValidationError ? kExitValidation
                                                                             : kExitComputation;
}

Json error_document(const EtaError& e) {
  return {{"status", "error"},
          {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

Json sphere_document(int n, const QVector& x0, int degree, const std::string& op,
                     const EngineOptions& opt) {
  const bool signature = op == "signature";
  Json out;
  out["n"] = n;
  out["operator"] = op;
  out["direction"] = qvector_to_json(x0);
  const LaurentSeries closed = signature ? sphere_eta_signature_closed(n, x0, degree)
                                         : sphere_eta_dirac_closed(n, x0, degree);
  out["closed_form"] = series_to_json(closed);
  if (n >= 2 && n <= kMaxBuiltinSphere) {
    const auto model = builtin_sphere(n);
    const EtaResult r = signature ? eta_signature_series(model.emb, {}, x0, degree, opt)
                                  : eta_dirac_series(model.emb, zeros(model.emb.h.ambient_dim), {}, x0,
                                                     degree, opt);
    out["engine"] = series_to_json(r.series);
    out["classical_eta"] = gaussian_to_json(r.classical_eta);
    out["match"] = r.series == closed;
    out["diagnostics"] = diagnostics_to_json(r.diagnostics);
  }
  return out;
}

Json character_document(const std::string& group, const QVector& kappa, const QVector& x0,
                        int degree, const EngineOptions& opt) {
  const auto rs = build_root_system(parse_root_system_spec(group));
  const auto w = enumerate_weyl_group(rs);
  Json out;
  out["group"] = group;
  out["kappa"] = qvector_to_json(kappa);
  out["direction"] = qvector_to_json(x0);
  out["series"] = series_to_json(weyl_character_series(rs, w, kappa, x0, degree, opt.mode));
  out["dimension"] = integer_to_json(weyl_dimension(rs, kappa));
  Json weights = Json::array();
  for (const auto& [mu, m] : freudenthal_multiplicities(rs, kappa)) {
    weights.push_back({{"weight", qvector_to_json(mu)}, {"multiplicity", m}});
  }
  out["weights"] = std::move(weights);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant eta invariants of homogeneous spaces"};
  app.require_subcommand(0, 1);

  std::string spec_file;
  int degree = -1;
  std::string direction;
  bool run_verify = false;
  std::string output;
  bool serial = false;
  app.add_option("--spec", spec_file, "Computation spec (JSON)");
  app.add_option("--degree", degree, "Override the requested degree")->check(CLI::NonNegativeNumber);
  app.add_option("--direction", direction, "Override the direction, e.g. 1,2/3");
  app.add_flag("--verify", run_verify, "Run the cross-check battery instead of the computation");
  app.add_option("--output", output, "Write the result document to FILE");
  app.add_flag("--serial", serial, "Evaluate Weyl sums serially");

  auto* sphere = app.add_subcommand("sphere", "Sphere closed forms and the engine on S^{2n-1}");
  int sphere_n = 0;
  std::string sphere_op = "dirac";
  sphere->add_option("--n", sphere_n, "Sphere index n (S^{2n-1})")->required();
  sphere->add_option("--operator", sphere_op, "dirac or signature")
      ->check(CLI::IsMember({"dirac", "signature"}));

  auto* character = app.add_subcommand("character", "Weyl character and weight multiplicities");
  std::string group;
  std::string kappa_text;
  character->add_option("--group", group, "Root system, e.g. D2 or A1xB2")->required();
  character->add_option("--kappa", kappa_text, "Highest weight, e.g. 1/2,1/2")->required();

  for (auto* sub : {sphere, character}) {
    sub->add_option("--direction", direction, "Direction, e.g. 1,2")->required();
    sub->add_option("--degree", degree, "Degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--output", output, "Write the result document to FILE");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  EngineOptions opt;
  opt.mode = serial ? Execution::Serial : Execution::Parallel;

  try {
    if (sphere->parsed()) {
      emit(sphere_document(sphere_n, parse_list(direction), degree < 0 ? 6 : degree, sphere_op, opt), output);
      return 0;
    }
    if (character->parsed()) {
      emit(character_document(group, parse_list(kappa_text), parse_list(direction), degree < 0 ? 6 : degree, opt),
           output);
      return 0;
    }
    if (spec_file.empty()) {
      std::cerr << "eqeta: --spec FILE or a subcommand is required\n" << app.help();
      return kExitValidation;
    }
    ComputationSpec spec = parse_spec(read_file(spec_file), false);
    if (degree >= 0) spec.degree = degree;
    if (!direction.empty()) spec.direction = parse_list(direction);
    if (run_verify) {
      const VerifyOutcome v = verify(spec, opt);
      emit(v.report, output);
      if (v.passed) return 0;
      return v.validation_failed ? kExitValidation : kExitComputation;
    }
    validate_spec(spec, true);
    emit(run(spec, opt), output);
    return 0;
  } catch (const EtaError& e) {
    std::cerr << "eqeta: " << e.what() << "\n";
    emit(error_document(e), output);
    return exit_code(e.kind());
  }
}
