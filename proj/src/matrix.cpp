#include "sptower/matrix.hpp"

namespace sptower {

GaussMatrix specialize(const SymMatrix& m, const GaussianRational& point) {
  return m.map<GaussianRational>([&](const RatFunc& f, std::size_t i, std::size_t j) {
    try {
      return f.evaluate(point);
    } catch (const std::domain_error&) {
      throw std::domain_error("pole at evaluation point in entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + "): " + f.str());
    }
  });
}

}  // namespace sptower
