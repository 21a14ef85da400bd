#include "tfbn/bn.hpp"

#include <algorithm>

#include "tfbn/checked.hpp"
#include "tfbn/error.hpp"
#include "tfbn/euler.hpp"

namespace tfbn {

using checked::add;
using checked::mul;
using checked::sub;

void check_bn_input(const SurfaceModel& s, const DivisorClass& E, std::int64_t N) {
  if (s.kind() != SurfaceKind::ProjectivePlane && s.kind() != SurfaceKind::Quadric)
    fail(ErrorKind::UnsupportedSurface, "Brill-Noether loci are classified on p2 and quadric only");
  check_class(s, E);
  for (std::int64_t c : E.coeffs)
    if (c < 0) fail(ErrorKind::ENotEffective, "E = " + to_string(E) + " must have nonnegative (bi)degree");
  const std::int64_t chi = chi_line_bundle(s, E);
  if (N <= 0 || N > chi)
    fail(ErrorKind::NOutOfRange,
         "N = " + std::to_string(N) + " outside (0, chi(O(E))] = (0, " + std::to_string(chi) + "]");
}

PrioritaryThreshold bn_prioritary_threshold(const SurfaceModel& s, const DivisorClass& E, std::int64_t N) {
  PrioritaryThreshold t;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const std::int64_t e = E[0];
    t.factor = 4;
    t.value = mul(add(e, 2), add(e, 4));
  } else {
    const std::int64_t e1 = E[0], e2 = E[1];
    t.factor = 2;
    if (e2 % 2 == 0) {
      t.value = mul(add(e1, 2), add(e2, 2));
    } else {
      t.value = add(mul(add(e1, 2), add(e2, 1)), 2);
      t.special_case = e2 == 1 && N == add(e1, 2);
    }
  }
  t.holds = mul(t.factor, N) >= t.value || t.special_case;
  return t;
}

std::vector<BNComponent> bn_components(const SurfaceModel& s, const DivisorClass& E, std::int64_t N) {
  check_bn_input(s, E, N);
  const DivisorClass K = canonical_class(s);
  const std::int64_t chiE = chi_line_bundle(s, E);
  const std::int64_t slack = sub(chiE, N);

  // Effective irreducible D with the fiber-degree cap. On P2: 1 <= d <= (e+1)/2.
  // On the quadric d2 <= e2/2, and gamma >= 0 forces N >= D(E-D-K) >= 2(d1+d2),
  // so d1 <= N bounds the search.
  std::vector<DivisorClass> candidates;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    for (std::int64_t d = 1; 2 * d <= E[0] + 1; ++d) candidates.push_back({d});
  } else {
    for (std::int64_t d1 = 0; d1 <= N; ++d1)
      for (std::int64_t d2 = 0; 2 * d2 <= E[1]; ++d2)
        if (is_effective_irreducible(s, {d1, d2})) candidates.push_back({d1, d2});
  }

  std::vector<BNComponent> out;
  for (const DivisorClass& D : candidates) {
    const std::int64_t split = intersect(s, D, E - D);
    if (split > slack) continue;
    const std::int64_t on_curve_min = intersect(s, D, E - D - K);
    const std::int64_t genus = chi_line_bundle(s, D + K);
    // gamma = N - on_curve_min - n must lie in [0, genus]
    const std::int64_t n_hi = sub(N, on_curve_min);
    const std::int64_t n_lo = std::max<std::int64_t>(0, sub(n_hi, genus));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      BNComponent c;
      c.kind = BNKind::CurveType;
      c.D = D;
      c.n = n;
      c.gamma_degree = n_hi - n;
      c.codim = add(split, 1);
      c.dim = sub(mul(2, N), c.codim);
      c.description = std::to_string(n) + (n == 1 ? " general point plus " : " general points plus ") +
                      std::to_string(N - n) + (N - n == 1 ? " point" : " points") + " on a curve in |" +
                      to_string(D) + "|";
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const BNComponent& a, const BNComponent& b) {
    if (*a.D != *b.D) return *a.D < *b.D;
    return a.n < b.n;
  });

  if (bn_prioritary_threshold(s, E, N).holds) {
    BNComponent c;
    c.kind = BNKind::PrioritaryType;
    c.codim = add(slack, 1);
    c.dim = sub(mul(2, N), c.codim);
    c.description = "prioritary (Serre-general) type";
    out.push_back(std::move(c));
  }
  return out;
}

TFComponent serre_correspondence(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                 const BNComponent& comp) {
  if (comp.kind != BNKind::CurveType || !comp.D)
    fail(ErrorKind::InvalidInput, "the Serre correspondence lookup needs a curve-type component");
  const DivisorClass c1 = E - canonical_class(s);
  auto tf = nonprioritary_component(s, c1, N, *comp.D, comp.n);
  if (!tf)
    fail(ErrorKind::AdmissibilityViolation, "curve-type component (D=" + to_string(*comp.D) +
                                                ", n=" + std::to_string(comp.n) +
                                                ") is not admissible in TF(2, E-K, N)");
  return *tf;
}

CodimCheck codim_two_path_check(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                const BNComponent& comp) {
  const DivisorClass c1 = E - canonical_class(s);
  std::int64_t tf_dim = 0;
  if (comp.kind == BNKind::PrioritaryType) {
    // The prioritary TF component exists whenever the BN component does; its
    // dimension formula is used regardless.
    const SheafClass sheaf(2, c1, N);
    tf_dim = -chi_pair(s, sheaf, sheaf);
  } else {
    tf_dim = serre_correspondence(s, E, N, comp).dimension;
  }
  const std::int64_t chi = chi_sheaf(s, SheafClass(2, c1, N));
  return {comp.codim, sub(mul(2, N), add(tf_dim, chi))};
}

}  // namespace tfbn
