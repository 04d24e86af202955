#pragma once

#include <span>
#include <string>
#include <string_view>

#include "hypolog/program.hpp"

namespace hypolog {

/// Triangular norm used to compose approximation degrees.
class TNorm {
 public:
  constexpr TNorm() = default;
  constexpr explicit TNorm(TNormKind kind) : kind_(kind) {}

  /// Accepts "min", "product" or "luka"; throws std::invalid_argument otherwise.
  static TNorm parse(std::string_view name);

  double operator()(double a, double b) const;
  TNormKind kind() const { return kind_; }
  std::string name() const;

  friend bool operator==(TNorm, TNorm) = default;

 private:
  TNormKind kind_ = TNormKind::Min;
};

/// Left fold of the t-norm over `degrees`; 1 for an empty list.
double degree_comp(std::span<const double> degrees, TNorm tnorm);

}  // namespace hypolog
