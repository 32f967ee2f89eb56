#include "eqeta/embedding.hpp"

#include <algorithm>
#include <unordered_map>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

void reject_type_a(const std::vector<RootComponent>& comps, const char* which) {
  for (const auto& c : comps) {
    if (c.type == RootType::A) {
      fail(ErrorKind::UnsupportedType,
           std::string("type A components are not supported in ") + which + " of an embedding");
    }
  }
}

// Gram inner product <x, y> = x^T G y.
Rational gram_dot(const QMatrix& gram, const QVector& x, const QVector& y) {
  return dot(x, gram * y);
}

bool positive_definite(const QMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
    if (minor.determinant() <= 0) return false;
  }
  return true;
}

QVector derive_normal(const QMatrix& iota, const QMatrix& gram, const QVector& delta) {
  const auto ns = (iota.transpose() * gram).null_space();
  if (ns.size() != 1) fail(ErrorKind::InvalidArgument, "s has no one-dimensional complement in t");
  QVector e = ns.front();
  if (dot(delta, e) < 0) e = -e;
  return e;
}

bool same_up_to_sign(const QVector& a, const QVector& b) { return a == b || a == -b; }

}  // namespace

std::vector<QVector> compute_isotropy_weights(const RootSystemData& g, const RootSystemData& h,
                                              const QMatrix& iota) {
  const QMatrix it = iota.transpose();
  std::vector<QVector> remaining;
  remaining.reserve(g.positive_roots.size());
  for (const auto& beta : g.positive_roots) remaining.push_back(it * beta);
  for (const auto& gamma : h.positive_roots) {
    const auto hit = std::find(remaining.begin(), remaining.end(), gamma);
    if (hit == remaining.end()) {
      fail(ErrorKind::IncompatiblePositivity,
           "positive root " + to_string(gamma) + " of H is not the restriction of a positive root of G");
    }
    remaining.erase(hit);
  }
  for (const auto& w : remaining) {
    if (is_zero(w)) {
      fail(ErrorKind::IncompatiblePositivity, "a positive root of G vanishes on s");
    }
    for (const auto& gamma : h.positive_roots) {
      if (w == -gamma) {
        fail(ErrorKind::IncompatiblePositivity,
             "restriction " + to_string(w) + " is a negative root of H");
      }
    }
  }
  return remaining;
}

QVector derive_delta(const RootSystemData& g, const QMatrix& iota,
                     const std::optional<QVector>& normal) {
  const auto ns = iota.transpose().null_space();
  if (ns.size() != 1) fail(ErrorKind::InvalidArgument, "annihilator of s is not one-dimensional");
  const QVector v = ns.front();
  const long d = g.lattice.denominator();
  QVector delta = v;
  for (long k = 1; k <= d; ++k) {
    const QVector c = Rational(k, d) * v;
    if (g.lattice.contains(c)) {
      delta = c;
      break;
    }
  }
  if (normal) {
    if (dot(delta, *normal) < 0) delta = -delta;
  } else {
    for (const auto& x : delta) {
      if (x != 0) {
        if (x < 0) delta = -delta;
        break;
      }
    }
  }
  return delta;
}

EmbeddingData make_embedding(const EmbeddingInput& input) {
  reject_type_a(input.g, "G");
  reject_type_a(input.h, "H");
  EmbeddingData emb;
  emb.g = build_root_system(input.g);
  emb.h = build_root_system(input.h);
  const std::size_t dg = emb.g.ambient_dim;
  const std::size_t dh = emb.h.ambient_dim;
  if (input.iota.rows() != dg || input.iota.cols() != dh) {
    fail(ErrorKind::InvalidArgument, "iota must be " + std::to_string(dg) + "x" + std::to_string(dh));
  }
  if (input.iota.rank() != dh) fail(ErrorKind::InvalidArgument, "iota must have full column rank");
  emb.iota = input.iota;
  emb.gram = input.gram.value_or(QMatrix::identity(dg));
  if (emb.gram.rows() != dg || emb.gram.cols() != dg) {
    fail(ErrorKind::InvalidArgument, "gram must be " + std::to_string(dg) + "x" + std::to_string(dg));
  }
  const QMatrix it = emb.iota.transpose();
  const QMatrix restricted_gram = it * emb.gram * emb.iota;
  if (dh > 0 && restricted_gram.determinant() == 0) {
    fail(ErrorKind::SingularGram, "gram is degenerate on s");
  }
  emb.restrict_to_s = dh > 0 ? restricted_gram.inverse() * it * emb.gram : QMatrix(0, dg);
  emb.projection = emb.iota * emb.restrict_to_s;
  if (dh == 0) emb.projection = QMatrix(dg, dg);

  if (emb.corank() == 1) {
    if (input.delta && input.delta->size() != dg) fail(ErrorKind::InvalidArgument, "delta has wrong dimension");
    if (input.normal && input.normal->size() != dg) fail(ErrorKind::InvalidArgument, "normal has wrong dimension");
    emb.delta = input.delta ? *input.delta : derive_delta(emb.g, emb.iota, input.normal);
    emb.normal = input.normal ? *input.normal : derive_normal(emb.iota, emb.gram, *emb.delta);
  }

  try {
    emb.isotropy_weights = compute_isotropy_weights(emb.g, emb.h, emb.iota);
  } catch (const EtaError& e) {
    emb.isotropy_error = e.what();
  }

  emb.wg = enumerate_weyl_group(emb.g);
  emb.wh = enumerate_weyl_group(emb.h);
  std::unordered_map<std::string, std::vector<std::size_t>> by_restriction;
  for (std::size_t i = 0; i < emb.wg.size(); ++i) {
    by_restriction[(emb.wg.element(i) * emb.iota).key()].push_back(i);
  }
  emb.wh_in_wg.resize(emb.wh.size());
  emb.alternate_lift.resize(emb.wh.size());
  for (std::size_t j = 0; j < emb.wh.size(); ++j) {
    const auto found = by_restriction.find((emb.iota * emb.wh.element(j)).key());
    if (found == by_restriction.end()) continue;
    std::vector<std::size_t> lifts = found->second;
    if (emb.normal && lifts.size() > 1) {
      std::stable_partition(lifts.begin(), lifts.end(), [&](std::size_t i) {
        return gram_dot(emb.gram, emb.wg.element(i) * *emb.normal, *emb.normal) > 0;
      });
    }
    emb.wh_in_wg[j] = lifts[0];
    if (lifts.size() > 1) emb.alternate_lift[j] = lifts[1];
  }

  std::vector<std::size_t> subgroup;
  for (const auto& l : emb.wh_in_wg)
    if (l) subgroup.push_back(*l);
  std::vector<bool> covered(emb.wg.size(), false);
  for (std::size_t i = 0; i < emb.wg.size(); ++i) {
    if (covered[i]) continue;
    emb.coset_representatives.push_back(i);
    for (const auto k : subgroup) {
      if (const auto idx = emb.wg.find(emb.wg.element(k) * emb.wg.element(i))) covered[*idx] = true;
    }
    covered[i] = true;
  }
  return emb;
}

QVector project_to_s(const EmbeddingData& emb, const QVector& x0) { return emb.projection * x0; }

QVector s_coordinates(const EmbeddingData& emb, const QVector& x0) {
  return emb.restrict_to_s * x0;
}

QVector compute_alpha(const EmbeddingData& emb, const QVector& kappa) {
  if (emb.corank() != 1 || !emb.delta || !emb.normal) {
    fail(ErrorKind::InvalidArgument, "alpha is defined only when rank G = rank H + 1");
  }
  const QVector& delta = *emb.delta;
  const QVector& e = *emb.normal;
  const std::size_t dg = emb.g.ambient_dim;
  const std::size_t dh = emb.h.ambient_dim;
  if (kappa.size() != dh) fail(ErrorKind::InvalidArgument, "kappa has wrong dimension");
  if (dot(delta, e) <= 0) fail(ErrorKind::InvalidArgument, "delta(E) must be positive");

  std::vector<QVector> rows;
  for (std::size_t j = 0; j < dh; ++j) rows.push_back(emb.iota.column(j));
  rows.push_back(e);
  QVector rhs = kappa + emb.h.rho;
  rhs.push_back(0);
  const QVector base = solve(QMatrix::from_rows(rows, dg), rhs);

  std::size_t j = 0;
  while (delta[j] == 0) ++j;
  const long d = emb.g.lattice.denominator();
  const Rational end = base[j] + delta[j];
  const Rational lo = std::min(base[j], end);
  const Rational hi = std::max(base[j], end);
  mpz_class k_lo;
  mpz_class k_hi;
  const Rational lo_d = lo * d;
  const Rational hi_d = hi * d;
  mpz_cdiv_q(k_lo.get_mpz_t(), lo_d.get_num_mpz_t(), lo_d.get_den_mpz_t());
  mpz_fdiv_q(k_hi.get_mpz_t(), hi_d.get_num_mpz_t(), hi_d.get_den_mpz_t());
  std::vector<QVector> solutions;
  for (mpz_class k = k_lo; k <= k_hi; ++k) {
    const Rational m = (Rational(k) / d - base[j]) / delta[j];
    if (m < 0 || m >= 1) continue;
    QVector alpha = base + m * delta;
    if (emb.g.lattice.contains(alpha)) solutions.push_back(std::move(alpha));
  }
  if (solutions.empty()) {
    fail(ErrorKind::NoLatticeSolution,
         "no lattice weight restricts to " + to_string(kappa + emb.h.rho) + " inside the window");
  }
  if (solutions.size() > 1) {
    fail(ErrorKind::NoLatticeSolution, "several lattice weights fit the window; delta is not primitive");
  }
  return solutions.front();
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!s.empty()) s += '\n';
    s += c.name + ": " + c.detail;
  }
  return s;
}

ValidationReport validate_embedding(const EmbeddingData& emb) {
  ValidationReport r;
  auto add = [&r](std::string name, bool passed, std::string detail = {}) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  add("iota_full_rank", emb.iota.rank() == emb.h.ambient_dim);
  add("gram_positive_definite", positive_definite(emb.gram));
  add("corank", emb.corank() >= 0, "rank G - rank H = " + std::to_string(emb.corank()));

  if (emb.corank() == 1) {
    const QVector& delta = *emb.delta;
    const QVector& e = *emb.normal;
    const QVector on_s = emb.iota.transpose() * delta;
    add("delta_vanishes_on_s", is_zero(on_s), "delta restricted to s is " + to_string(on_s));
    add("delta_positive_on_E", dot(delta, e) > 0, "delta(E) = " + to_string(dot(delta, e)));
    const QVector e_on_s = emb.iota.transpose() * (emb.gram * e);
    add("normal_orthogonal_to_s", !is_zero(e) && is_zero(e_on_s), "E = " + to_string(e));
    bool primitive = false;
    std::string detail;
    try {
      const QVector expected = derive_delta(emb.g, emb.iota, std::nullopt);
      primitive = emb.g.lattice.contains(delta) && same_up_to_sign(delta, expected);
      detail = "primitive generator is " + to_string(expected);
    } catch (const EtaError& err) {
      detail = err.what();
    }
    add("delta_primitive", primitive, detail);
  }

  const std::size_t expected_count = emb.g.positive_roots.size() - std::min(emb.g.positive_roots.size(), emb.h.positive_roots.size());
  add("restriction_bijection",
      emb.isotropy_error.empty() && emb.isotropy_weights.size() == expected_count &&
          emb.h.positive_roots.size() <= emb.g.positive_roots.size(),
      emb.isotropy_error.empty()
          ? std::to_string(emb.isotropy_weights.size()) + " isotropy weights, expected " +
                std::to_string(expected_count)
          : emb.isotropy_error);

  std::size_t missing = 0;
  for (const auto& l : emb.wh_in_wg)
    if (!l) ++missing;
  add("weyl_subgroup", missing == 0,
      std::to_string(missing) + " elements of W_H have no lift to W_G");

  if (emb.corank() == 1) {
    const QVector& delta = *emb.delta;
    bool signs_ok = true;
    std::string detail;
    for (std::size_t j = 0; j < emb.wh.size() && signs_ok; ++j) {
      for (const auto& lift : {emb.wh_in_wg[j], emb.alternate_lift[j]}) {
        if (!lift) continue;
        const QVector lhs = Rational(emb.wg.sign(*lift)) * (emb.wg.element(*lift).transpose() * delta);
        const QVector rhs = Rational(emb.wh.sign(j)) * delta;
        if (lhs != rhs) {
          signs_ok = false;
          detail = "fails for W_G element " + std::to_string(*lift);
          break;
        }
      }
    }
    add("weyl_sign_relation", signs_ok, detail);
  }
  return r;
}

void require_valid(const EmbeddingData& emb) {
  const auto report = validate_embedding(emb);
  if (!report.ok()) fail(ErrorKind::ValidationError, report.summary());
}

}  // namespace eqeta
