#include "emax/moduli.hpp"

#include "emax/parallel.hpp"

#include <stdexcept>

namespace emax {

namespace {

Integer ceil_rational(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (f * d != n && n > 0) f += 1;
  return f;
}

ModuliEntry solve_entry(Manifold manifold, int genus, const Rational& p, int k, const SolveOptions& options) {
  ModuliEntry entry;
  entry.k = k;
  entry.degree = manifold == Manifold::Product ? 2 * k : 2 * k + 1;
  const Parity parity = manifold == Manifold::Product ? Parity::Even : Parity::Odd;
  entry.x = class_from_p(parity, k, p).x;

  const RuledSurface surface = make_surface(genus, entry.degree);
  const Rational& s = surface.s_sigma;
  entry.positivity_bound = entry.x < 1 / (s * s + 2);
  const Rational g1 = Rational(1 - genus);
  if (manifold == Manifold::Product) {
    entry.p_bound = p > g1 * g1 / k + 2 * k;
  } else {
    const int odd = 2 * k + 1;
    entry.p_bound = 2 * p + 1 > 2 * g1 * g1 / odd + 2 * odd;
  }

  entry.solved = solve_case1(entry.x, surface, options);
  entry.admitted = entry.solved->is_solution();
  if (s < 0 && entry.positivity_bound && !entry.admitted)
    throw std::logic_error("certifier rejected a class below the 1/(s^2+2) bound");
  entry.eh = entry.admitted ? eh_value(*entry.solved, surface).eh
                            : eh_case1_closed(to_double(entry.x), surface);
  return entry;
}

}  // namespace

std::string_view to_string(Manifold manifold) { return manifold == Manifold::Product ? "product" : "twisted"; }

ModuliScan enumerate_components(Manifold manifold, int genus, const Rational& p, const SolveOptions& options) {
  if (genus < 1) throw Error(ErrorKind::InvalidArgument, "moduli scans need genus >= 1");
  if (!(p > 0)) throw Error(ErrorKind::EmptyScan, "class 4pi(E + pC) needs p > 0, got " + to_string(p));

  ModuliScan scan;
  scan.manifold = manifold;
  scan.genus = genus;
  scan.p = p;

  const int k_max = static_cast<int>(ceil_rational(p)) - 1;
  const int first_k = manifold == Manifold::Product ? 1 : 0;
  const int solved_count = std::max(0, k_max - first_k + 1);

  std::vector<ModuliEntry> solved(static_cast<std::size_t>(solved_count));
  parallel_for(solved.size(), [&](std::size_t i) {
    solved[i] = solve_entry(manifold, genus, p, first_k + static_cast<int>(i), options);
  });

  if (manifold == Manifold::Product) {
    ModuliEntry reference;
    reference.k = 0;
    reference.degree = 0;
    reference.x = 0;
    reference.eh = reference_eh(ProductCSC{genus, p});
    reference.admitted = true;
    reference.positivity_bound = true;
    reference.p_bound = true;
    scan.entries.push_back(std::move(reference));
  }
  for (auto& e : solved) scan.entries.push_back(std::move(e));
  if (scan.entries.empty()) throw Error(ErrorKind::EmptyScan, "no admissible k for p = " + to_string(p));

  const ModuliEntry* previous = nullptr;
  for (const auto& e : scan.entries) {
    if (genus >= 2 && e.degree > 0 && e.p_bound && !e.positivity_bound) {
      scan.warnings.push_back("k=" + std::to_string(e.k) +
                              ": sufficient bound on p holds but x >= 1/(s^2+2); admission decided by the "
                              "positivity certifier (verdict " +
                              std::string(to_string(e.solved->verdict.status)) + ")");
    }
    if (!e.admitted) continue;
    if (previous && !(e.eh < previous->eh))
      throw std::logic_error("Einstein-Hilbert values not strictly decreasing in k");
    previous = &e;
    ++scan.distinct_count;
  }
  return scan;
}

Rational witness_class(Manifold manifold, int genus, int N, const SolveOptions& options) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
  constexpr int kMaxHalfSteps = 100000;
  for (int twice_p = 1; twice_p <= kMaxHalfSteps; ++twice_p) {
    Rational p(twice_p, 2);
    if (enumerate_components(manifold, genus, p, options).distinct_count >= N) return p;
  }
  throw std::logic_error("witness_class search exhausted");
}

}  // namespace emax
