#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "eqeta/embedding.hpp"
#include "eqeta/eta_engine.hpp"
#include "eqeta/serialize.hpp"

namespace eqeta {

enum class Operator { DiracUntwisted, DiracTwisted, Signature, EtaTilde, BldV1, BldV2, Character };

std::string_view to_string(Operator op);
Operator operator_from_string(const std::string& name);  // throws ParseError

/// One requested computation. The model is a builtin sphere index or an
/// inline embedding.
struct ComputationSpec {
  std::variant<int, EmbeddingInput> model;
  Operator op = Operator::DiracUntwisted;
  std::optional<QVector> kappa;
  QVector direction;
  int degree = 0;
  ExternalTerms external;
  DefectFormula defect = DefectFormula::Auto;

  bool operator==(const ComputationSpec&) const = default;
};

/// Parses a JSON document. ParseError for malformed input; when
/// validate_model is set, also runs validate_spec.
ComputationSpec parse_spec(const std::string& text, bool validate_model = true);
ComputationSpec spec_from_json(const Json& j);

Json spec_to_json(const ComputationSpec& spec);
std::string serialize_spec(const ComputationSpec& spec);

/// Builds the embedding and checks dimensions; throws ValidationError.
/// With check_embedding unset the embedding invariants are not enforced.
void validate_spec(const ComputationSpec& spec, bool check_embedding = true);

EmbeddingData build_model(const ComputationSpec& spec);

/// κ as used by the operator (zero for the untwisted operators).
QVector effective_kappa(const ComputationSpec& spec, const EmbeddingData& emb);

/// Result document.
Json run(const ComputationSpec& spec, const EngineOptions& opt = {});

struct VerifyOutcome {
  Json report;
  bool passed = false;
  bool validation_failed = false;
};

/// Cross-check battery; failures are reported, not thrown.
VerifyOutcome verify(const ComputationSpec& spec, const EngineOptions& opt = {});

}  // namespace eqeta
