#include "hypolog/tnorm.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypolog {

TNorm TNorm::parse(std::string_view name) {
  if (name == "min") return TNorm(TNormKind::Min);
  if (name == "product" || name == "prod") return TNorm(TNormKind::Product);
  if (name == "luka" || name == "lukasiewicz") return TNorm(TNormKind::Luka);
  throw std::invalid_argument("unknown t-norm '" + std::string(name) + "'");
}

double TNorm::operator()(double a, double b) const {
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  switch (kind_) {
    case TNormKind::Min: return std::min(a, b);
    case TNormKind::Product: return a * b;
    case TNormKind::Luka: return std::max(0.0, a + b - 1.0);
  }
  return 0.0;
}

std::string TNorm::name() const {
  switch (kind_) {
    case TNormKind::Min: return "min";
    case TNormKind::Product: return "product";
    case TNormKind::Luka: return "luka";
  }
  return "?";
}

double degree_comp(std::span<const double> degrees, TNorm tnorm) {
  double acc = 1.0;
  for (double d : degrees) acc = tnorm(acc, d);
  return acc;
}

}  // namespace hypolog
