#include "eqeta/root_system.hpp"

#include <cctype>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_odd(const Rational& q) { return q.get_den() == 2; }

char type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

// Positive and simple roots of one component in its own coordinates.
void component_roots(const RootComponent& c, std::vector<QVector>& positive,
                     std::vector<QVector>& simple) {
  const auto dim = coordinate_count(c);
  auto e = [dim](std::size_t i) { return unit_vector(dim, i); };
  switch (c.type) {
    case RootType::A:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) positive.push_back(e(i) - e(j));
      for (std::size_t i = 0; i + 1 < dim; ++i) simple.push_back(e(i) - e(i + 1));
      break;
    case RootType::B:
    case RootType::C:
    case RootType::D:
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
          positive.push_back(e(i) - e(j));
          positive.push_back(e(i) + e(j));
        }
      }
      if (c.type == RootType::B) {
        for (std::size_t i = 0; i < dim; ++i) positive.push_back(e(i));
      } else if (c.type == RootType::C) {
        for (std::size_t i = 0; i < dim; ++i) positive.push_back(Rational(2) * e(i));
      }
      for (std::size_t i = 0; i + 1 < dim; ++i) simple.push_back(e(i) - e(i + 1));
      if (c.type == RootType::B) simple.push_back(e(dim - 1));
      if (c.type == RootType::C) simple.push_back(Rational(2) * e(dim - 1));
      if (c.type == RootType::D) simple.push_back(e(dim - 2) + e(dim - 1));
      break;
  }
}

QVector embed(const QVector& v, std::size_t offset, std::size_t total) {
  QVector out = zeros(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

std::size_t coordinate_count(const RootComponent& c) {
  return static_cast<std::size_t>(c.type == RootType::A ? c.rank + 1 : c.rank);
}

LatticeData::LatticeData(std::vector<RootComponent> components, std::vector<std::size_t> offsets)
    : components_(std::move(components)), offsets_(std::move(offsets)) {}

bool LatticeData::contains(const QVector& weight) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    const std::size_t lo = offsets_[k];
    const std::size_t dim = coordinate_count(c);
    switch (c.type) {
      case RootType::A: {
        Rational sum = 0;
        for (std::size_t i = 0; i < dim; ++i) sum += weight[lo + i];
        if (sum != 0) return false;
        for (std::size_t i = 1; i < dim; ++i) {
          if (!is_integer(weight[lo + i] - weight[lo])) return false;
        }
        break;
      }
      case RootType::C:
        for (std::size_t i = 0; i < dim; ++i)
          if (!is_integer(weight[lo + i])) return false;
        break;
      case RootType::B:
      case RootType::D: {
        bool all_int = true;
        bool all_half = true;
        for (std::size_t i = 0; i < dim; ++i) {
          all_int = all_int && is_integer(weight[lo + i]);
          all_half = all_half && is_half_odd(weight[lo + i]);
        }
        if (!all_int && !all_half) return false;
        break;
      }
    }
  }
  return true;
}

long LatticeData::denominator() const {
  long d = 1;
  for (const auto& c : components_) {
    const long f = c.type == RootType::A ? c.rank + 1 : (c.type == RootType::C ? 1 : 2);
    mpz_class l;
    mpz_lcm_ui(l.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(f));
    d = l.get_si();
  }
  return d;
}

int RootSystemData::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

RootSystemData build_root_system(const std::vector<RootComponent>& components) {
  RootSystemData rs;
  rs.components = components;
  for (const auto& c : components) {
    if (c.rank < 1) fail(ErrorKind::UnsupportedType, "rank must be at least 1");
    if (c.type == RootType::D && c.rank < 2) fail(ErrorKind::UnsupportedType, "D_n needs n >= 2");
    rs.offsets.push_back(rs.ambient_dim);
    rs.ambient_dim += coordinate_count(c);
  }
  for (std::size_t k = 0; k < components.size(); ++k) {
    std::vector<QVector> positive;
    std::vector<QVector> simple;
    component_roots(components[k], positive, simple);
    for (const auto& r : positive) rs.positive_roots.push_back(embed(r, rs.offsets[k], rs.ambient_dim));
    for (const auto& r : simple) rs.simple_roots.push_back(embed(r, rs.offsets[k], rs.ambient_dim));
  }
  rs.rho = zeros(rs.ambient_dim);
  for (const auto& r : rs.positive_roots) rs.rho = rs.rho + r;
  rs.rho = Rational(1, 2) * rs.rho;
  rs.lattice = LatticeData(rs.components, rs.offsets);
  return rs;
}

std::vector<RootComponent> parse_root_system_spec(const std::string& text) {
  std::vector<RootComponent> out;
  if (text.empty() || text == "1") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('x', pos);
    const std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2) fail(ErrorKind::ParseError, "bad root system component '" + part + "'");
    RootType type;
    switch (std::toupper(static_cast<unsigned char>(part[0]))) {
      case 'A': type = RootType::A; break;
      case 'B': type = RootType::B; break;
      case 'C': type = RootType::C; break;
      case 'D': type = RootType::D; break;
      case 'E':
      case 'F':
      case 'G':
        fail(ErrorKind::UnsupportedType, "exceptional type '" + part + "'");
      default:
        fail(ErrorKind::ParseError, "unknown root system type '" + part + "'");
    }
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        fail(ErrorKind::ParseError, "bad rank in '" + part + "'");
    }
    const int rank = std::stoi(part.substr(1));
    if (rank < 1 || (type == RootType::D && rank < 2))
      fail(ErrorKind::UnsupportedType, "unsupported rank in '" + part + "'");
    out.push_back({type, rank});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string to_string(const std::vector<RootComponent>& components) {
  if (components.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) s += 'x';
    s += type_letter(components[k].type);
    s += std::to_string(components[k].rank);
  }
  return s;
}

bool is_regular(const RootSystemData& rs, const QVector& x0) {
  for (const auto& r : rs.positive_roots)
    if (dot(r, x0) == 0) return false;
  return true;
}

bool is_dominant(const RootSystemData& rs, const QVector& weight) {
  for (const auto& a : rs.simple_roots)
    if (dot(a, weight) < 0) return false;
  return true;
}

}  // namespace eqeta
