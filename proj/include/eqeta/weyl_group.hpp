#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqeta/laurent_series.hpp"
#include "eqeta/root_system.hpp"

namespace eqeta {

/// How Weyl-group sums are evaluated. Both produce identical series: terms
/// are computed independently and always combined in element order.
enum class Execution { Serial, Parallel };

/// Fully enumerated Weyl group acting on Cartan coordinates. Elements are
/// orthogonal for the standard inner product, so one matrix acts on both
/// directions and covectors. Element 0 is the identity.
class WeylGroupData {
 public:
  WeylGroupData() = default;
  WeylGroupData(std::vector<QMatrix> elements, std::vector<int> signs);

  std::size_t size() const { return elements_.size(); }
  std::size_t dimension() const { return elements_.empty() ? 0 : elements_.front().rows(); }
  const QMatrix& element(std::size_t i) const { return elements_[i]; }
  int sign(std::size_t i) const { return signs_[i]; }
  const std::vector<QMatrix>& elements() const { return elements_; }
  const std::vector<int>& signs() const { return signs_; }

  std::optional<std::size_t> find(const QMatrix& m) const;

 private:
  std::vector<QMatrix> elements_;
  std::vector<int> signs_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Closure of the simple reflections; signs are determinants.
WeylGroupData enumerate_weyl_group(const RootSystemData& rs);

/// Closed-form group order for the components.
std::size_t weyl_group_order(const std::vector<RootComponent>& components);

using SeriesTerm = std::function<LaurentSeries(std::size_t index)>;

/// Sum of term(0) + ... + term(count - 1). In parallel mode terms are
/// evaluated concurrently; an exception from any term is rethrown (the one
/// with the lowest index wins).
LaurentSeries indexed_sum(std::size_t count, const SeriesTerm& term,
                          Execution mode = Execution::Parallel);

using DirectionEvaluator = std::function<LaurentSeries(const QVector& direction)>;

/// sum_w sign(w) f(w X0).
LaurentSeries alternating_sum(const WeylGroupData& w, const DirectionEvaluator& f,
                              const QVector& x0, Execution mode = Execution::Parallel);

}  // namespace eqeta
