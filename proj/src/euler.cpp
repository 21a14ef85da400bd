#include "tfbn/euler.hpp"

#include "tfbn/checked.hpp"
#include "tfbn/error.hpp"

namespace tfbn {

using checked::add;
using checked::mul;
using checked::sub;

SheafClass::SheafClass(ChernData c) : chern(std::move(c)) {
  if (chern.rank < 1) fail(ErrorKind::InvalidInput, "sheaf rank must be >= 1");
}

SheafClass::SheafClass(std::int64_t rank, DivisorClass c1, std::int64_t c2)
    : SheafClass(ChernData{rank, std::move(c1), c2}) {}

std::int64_t chi_line_bundle(const SurfaceModel& s, const DivisorClass& d) {
  const DivisorClass k = canonical_class(s);
  return add(s.chi_O(), checked::half_exact(intersect(s, d, d - k)));
}

std::int64_t chi_sheaf(const SurfaceModel& s, const SheafClass& f) {
  const DivisorClass k = canonical_class(s);
  std::int64_t v = add(mul(f.rank(), s.chi_O()), checked::half_exact(intersect(s, f.c1(), f.c1() - k)));
  return sub(v, f.c2());
}

std::int64_t ch2_x2(const SurfaceModel& s, const SheafClass& f) {
  return sub(intersect(s, f.c1(), f.c1()), mul(2, f.c2()));
}

std::int64_t chi_pair(const SurfaceModel& s, const SheafClass& f, const SheafClass& g) {
  const DivisorClass k = canonical_class(s);
  // Everything doubled; the division at the end is exact.
  std::int64_t twice = mul(2, mul(mul(f.rank(), g.rank()), s.chi_O()));
  twice = add(twice, mul(f.rank(), ch2_x2(s, g)));
  twice = add(twice, mul(g.rank(), ch2_x2(s, f)));
  twice = sub(twice, mul(2, intersect(s, f.c1(), g.c1())));
  const DivisorClass mixed = f.rank() * g.c1() - g.rank() * f.c1();
  twice = sub(twice, intersect(s, k, mixed));
  return checked::half_exact(twice);
}

std::int64_t chi_self_rank2(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2) {
  return sub(add(mul(4, s.chi_O()), intersect(s, c1, c1)), mul(4, c2));
}

std::int64_t chi_hn_stratum(const SurfaceModel& s, const DivisorClass& l1, std::int64_t n1,
                            const DivisorClass& l2, std::int64_t n2) {
  if (n1 < 0 || n2 < 0) fail(ErrorKind::InvalidInput, "point counts must be nonnegative");
  return sub(sub(chi_line_bundle(s, l2 - l1), n1), n2);
}

SheafClass direct_sum(const SurfaceModel& s, std::span<const DivisorClass> lines) {
  if (lines.empty()) fail(ErrorKind::InvalidInput, "empty direct sum");
  DivisorClass c1 = s.zero();
  std::int64_t c2 = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    c1 = c1 + lines[i];
    for (std::size_t j = i + 1; j < lines.size(); ++j) c2 = add(c2, intersect(s, lines[i], lines[j]));
  }
  return SheafClass(static_cast<std::int64_t>(lines.size()), c1, c2);
}

}  // namespace tfbn
