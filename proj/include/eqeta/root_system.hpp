#pragma once

#include <string>
#include <vector>

#include "eqeta/rational.hpp"

namespace eqeta {

enum class RootType { A, B, C, D };

struct RootComponent {
  RootType type;
  int rank;

  bool operator==(const RootComponent&) const = default;
};

/// Integral weight lattice of the simply connected group, per component:
/// A_n trace-zero with integral differences, C_n the full Z^n, and for B_n/D_n
/// the spin lattice (all coordinates integral or all in Z + 1/2).
class LatticeData {
 public:
  LatticeData() = default;
  LatticeData(std::vector<RootComponent> components, std::vector<std::size_t> offsets);

  bool contains(const QVector& weight) const;
  /// Every lattice vector lies in (1/d) Z^dim for this d.
  long denominator() const;

 private:
  std::vector<RootComponent> components_;
  std::vector<std::size_t> offsets_;
};

struct RootSystemData {
  std::vector<RootComponent> components;
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> offsets;  // first coordinate of each component
  std::vector<QVector> simple_roots;
  std::vector<QVector> positive_roots;
  QVector rho;
  LatticeData lattice;

  int rank() const;
};

/// Coordinates per component: rank for B/C/D, rank + 1 for A.
std::size_t coordinate_count(const RootComponent& c);

/// Throws UnsupportedType on rank < 1 or D_1.
RootSystemData build_root_system(const std::vector<RootComponent>& components);

/// "D2", "B3", "D2xA1"; "1" (or the empty string) denotes the trivial group.
std::vector<RootComponent> parse_root_system_spec(const std::string& text);
std::string to_string(const std::vector<RootComponent>& components);

/// No positive root annihilates X0.
bool is_regular(const RootSystemData& rs, const QVector& x0);
/// Nonnegative pairing with every simple root.
bool is_dominant(const RootSystemData& rs, const QVector& weight);

}  // namespace eqeta
