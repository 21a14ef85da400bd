#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tfbn/bn.hpp"
#include "tfbn/cohomology.hpp"
#include "tfbn/oracles.hpp"
#include "tfbn/surface.hpp"
#include "tfbn/tf.hpp"

// Structured reports. JSON is the single source of truth; table and CSV
// renderings are derived from it. Every numeric field is an integer, and
// half-integer thresholds are emitted multiplied through (suffix _x2 / _x4).
namespace tfbn::report {

using Json = nlohmann::json;

Json to_json(const DivisorClass& d);
Json to_json(const Window& w);
Json to_json(const TFComponent& c);
Json to_json(const BNComponent& c);
Json to_json(const ClassPolynomial& p);
Json to_json(const AdmissibleRegion& r);

/// With check = true every nonprioritary dimension is recomputed from the
/// expanded form -chi(E,E) + chi(-c1) + D(D - c1 - K) - c2 and compared.
Json tf_report(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2, const Window& window,
               bool default_window, bool check = false);

/// With check = true each row also carries the Serre-correspondence TF
/// component and both codimension routes; "consistent" is false if any
/// check failed.
Json bn_report(const SurfaceModel& s, const DivisorClass& E, std::int64_t N, bool check);

Json chi_report(const SurfaceModel& s, const SheafClass& f);
Json cohom_report(const SurfaceModel& s, const DivisorClass& d);

/// Samples `samples` configurations per curve-type component (seeds
/// seed, seed+1, ...) plus as many general configurations. "ok" requires
/// h1 >= 1 on at least 19/20 of the component samples and h1 = 0 on every
/// general sample.
Json verify_bn_report(const SurfaceModel& s, const DivisorClass& E, std::int64_t N, std::uint64_t seed,
                      int samples);
Json cross_ruling_report(const DivisorClass& c1, std::int64_t c2, const Window& window);

/// Canonical serialization: sorted keys, indent 2, trailing newline.
std::string dump_pretty(const Json& j);
/// Canonical single-line serialization, trailing newline.
std::string dump_line(const Json& j);

std::string render_table(const Json& report);
std::string render_csv(const Json& report, bool header = true);

}  // namespace tfbn::report
