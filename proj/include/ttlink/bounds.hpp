#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

#include "ttlink/reduction.hpp"
#include "ttlink/tlink.hpp"

namespace ttlink {

// Volume of the regular hyperbolic ideal tetrahedron, 3 * Lobachevsky(pi/3).
inline constexpr double kV3 = 1.0149416064096536;

using Rat = boost::rational<long long>;

double v3_value(const Rat& units);

// An upper volume bound in exact v3 units. The primary value comes from the
// tetrahedron count after reduction; the coarser theorem-level closed form
// rides along as metadata.
struct VolumeBound {
  Rat v3_units = 0;
  double decimal = 0.0;
  std::string case_tag;
  Rat theorem_units = 0;
  double theorem_decimal = 0.0;
  bool satellite = false;
  std::optional<std::pair<long long, long long>> companion;
  std::optional<ReducedModel> reduced;
};

// Ideal tetrahedron counts for the surgery parents.
long long tetra_count_torus(long long n, long long m, long long r);
long long tetra_count_twisted(long long n, long long m, long long r,
                              long long s_prime, const RootSubset& root);
long long tetra_count_tlink0(const TLinkSpec& spec);
long long tetra_count_tlink(const TLinkSpec& spec);

VolumeBound volume_bound_ttl(const TwistedTorusParams& params);
VolumeBound volume_bound_dual(const TwistedTorusParams& params);
VolumeBound best_volume_bound(const TwistedTorusParams& params);
VolumeBound volume_bound_tlink(const TLinkSpec& spec);

std::string format_rational(const Rat& value);

}  // namespace ttlink
