#include "eqeta/weyl_group.hpp"

#include <deque>
#include <exception>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

QMatrix reflection(const QVector& root) {
  const std::size_t n = root.size();
  const Rational scale = Rational(2) / dot(root, root);
  QMatrix m = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= scale * root[i] * root[j];
  return m;
}

}  // namespace

WeylGroupData::WeylGroupData(std::vector<QMatrix> elements, std::vector<int> signs)
    : elements_(std::move(elements)), signs_(std::move(signs)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);
}

std::optional<std::size_t> WeylGroupData::find(const QMatrix& m) const {
  const auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeylGroupData enumerate_weyl_group(const RootSystemData& rs) {
  std::vector<QMatrix> gens;
  for (const auto& a : rs.simple_roots) gens.push_back(reflection(a));
  std::vector<QMatrix> elements{QMatrix::identity(rs.ambient_dim)};
  std::unordered_map<std::string, std::size_t> seen{{elements[0].key(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      QMatrix next = g * elements[cur];
      auto key = next.key();
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(next));
    }
  }
  std::vector<int> signs;
  signs.reserve(elements.size());
  for (const auto& m : elements) signs.push_back(m.determinant() > 0 ? 1 : -1);
  return WeylGroupData(std::move(elements), std::move(signs));
}

std::size_t weyl_group_order(const std::vector<RootComponent>& components) {
  std::size_t order = 1;
  for (const auto& c : components) {
    std::size_t fact = 1;
    const int n = c.type == RootType::A ? c.rank + 1 : c.rank;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
    switch (c.type) {
      case RootType::A: order *= fact; break;
      case RootType::B:
      case RootType::C: order *= fact << c.rank; break;
      case RootType::D: order *= fact << (c.rank - 1); break;
    }
  }
  return order;
}

LaurentSeries indexed_sum(std::size_t count, const SeriesTerm& term, Execution mode) {
  LaurentSeries total;
  if (mode == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) total += term(i);
    return total;
  }
  std::vector<LaurentSeries> terms(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      terms[idx] = term(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& t : terms) total += t;
  return total;
}

LaurentSeries alternating_sum(const WeylGroupData& w, const DirectionEvaluator& f,
                              const QVector& x0, Execution mode) {
  return indexed_sum(
      w.size(),
      [&](std::size_t i) {
        LaurentSeries s = f(w.element(i) * x0);
        if (w.sign(i) < 0) s = -s;
        return s;
      },
      mode);
}

}  // namespace eqeta
