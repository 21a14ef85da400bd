#pragma once

#include <cstdint>
#include <span>

#include "tfbn/surface.hpp"

namespace tfbn {

/// Numerical data of a coherent sheaf: rank, c1 and c2.
struct ChernData {
  std::int64_t rank = 1;
  DivisorClass c1;
  std::int64_t c2 = 0;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// A sheaf known only through its Chern data.
struct SheafClass {
  ChernData chern;

  SheafClass() = default;
  explicit SheafClass(ChernData c);
  SheafClass(std::int64_t rank, DivisorClass c1, std::int64_t c2);

  std::int64_t rank() const { return chern.rank; }
  const DivisorClass& c1() const { return chern.c1; }
  std::int64_t c2() const { return chern.c2; }
};

/// chi(O_S) + D(D-K)/2. D(D-K) is always even.
std::int64_t chi_line_bundle(const SurfaceModel& s, const DivisorClass& d);

/// Riemann-Roch: r chi(O_S) + c1(c1-K)/2 - c2.
std::int64_t chi_sheaf(const SurfaceModel& s, const SheafClass& f);

/// twice ch2, i.e. c1^2 - 2 c2.
std::int64_t ch2_x2(const SurfaceModel& s, const SheafClass& f);

/// chi(F,G) = sum (-1)^i dim Ext^i(F,G) from Riemann-Roch:
///   rF rG chi(O) + rF ch2(G) + rG ch2(F) - c1(F)c1(G) - K(rF c1(G) - rG c1(F))/2.
std::int64_t chi_pair(const SurfaceModel& s, const SheafClass& f, const SheafClass& g);

/// chi(E,E) for rank 2: 4 chi(O) + c1^2 - 4 c2.
std::int64_t chi_self_rank2(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2);

/// chi(I_Z1(L1), I_Z2(L2)) = chi(O(L2-L1)) - n1 - n2 for twisted ideal sheaves.
std::int64_t chi_hn_stratum(const SurfaceModel& s, const DivisorClass& l1, std::int64_t n1,
                            const DivisorClass& l2, std::int64_t n2);

/// Chern data of a direct sum of line bundles (Whitney formula).
SheafClass direct_sum(const SurfaceModel& s, std::span<const DivisorClass> lines);

}  // namespace tfbn
