#ifndef EMAX_MODULI_HPP
#define EMAX_MODULI_HPP

#include "emax/functional.hpp"
#include "emax/numeric.hpp"
#include "emax/surface.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emax {

enum class Manifold { Product, Twisted };

std::string_view to_string(Manifold manifold);

/// One complex structure (degree n) carrying the fixed class 4 pi (E + p C).
struct ModuliEntry {
  int k = 0;
  int degree = 0;          // 0 marks the reference product metric on CP^1 x Sigma
  Rational x;              // 0 for the reference entry
  std::optional<EMCandidate> solved;
  double eh = 0.0;         // formal value when not admitted
  bool admitted = false;
  bool positivity_bound = false;  // x < 1/(s^2 + 2)
  bool p_bound = false;          // sufficient condition on p for this k
};

struct ModuliScan {
  Manifold manifold = Manifold::Product;
  int genus = 1;
  Rational p;
  std::vector<ModuliEntry> entries;  // ascending k
  int distinct_count = 0;
  std::vector<std::string> warnings;
};

/// Enumerates k = 0..ceil(p)-1 for the fixed class, solves each Case 1
/// candidate and admits it iff its profile is certified positive. The k = 0
/// product entry is the constant-scalar-curvature product metric.
ModuliScan enumerate_components(Manifold manifold, int genus, const Rational& p, const SolveOptions& options = {});

/// Smallest half-integer p whose scan has at least N admitted entries.
Rational witness_class(Manifold manifold, int genus, int N, const SolveOptions& options = {});

}  // namespace emax

#endif  // EMAX_MODULI_HPP
