#include "ttlink/bounds.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ttlink {

double v3_value(const Rat& units) {
  return boost::rational_cast<double>(units) * kV3;
}

std::string format_rational(const Rat& value) {
  std::ostringstream out;
  out << value.numerator();
  if (value.denominator() != 1) out << '/' << value.denominator();
  return out.str();
}

namespace {

void check_reduced_pair(long long n, long long m, long long r) {
  if (n < 1 || m < 1 || n >= r || m >= r || n + m < r)
    fail(Errc::InvalidArgument,
         "tetrahedron count needs 0 < n,m < r and n+m >= r");
}

Rat finish(VolumeBound& bound) {
  bound.decimal = v3_value(bound.v3_units);
  bound.theorem_decimal = v3_value(bound.theorem_units);
  return bound.v3_units;
}

}  // namespace

long long tetra_count_torus(long long n, long long m, long long r) {
  check_reduced_pair(n, m, r);
  if (r == 2) return 10;
  if (n + m == r) return 2 * r + 8;
  return 2 * r + 10;
}

long long tetra_count_twisted(long long n, long long m, long long r,
                              long long s_prime, const RootSubset& root) {
  check_reduced_pair(n, m, r);
  if (s_prime == 0)
    fail(Errc::WrongCase, "s' = 0 is the torus case; use tetra_count_torus");
  if (s_prime < 0 || s_prime >= r)
    fail(Errc::InvalidArgument, "twisted count needs 0 < s' < r");
  if (r == 2) return 10;  // a half twist in a 2-punctured disk is volume-free
  if (root.strands != r)
    fail(Errc::InvalidArgument, "root strand count must equal r");
  if (root.is_standard()) return r * s_prime + 3 * r - s_prime + 9;
  return r * s_prime + 6 * r - s_prime + 3;
}

VolumeBound volume_bound_ttl(const TwistedTorusParams& params) {
  require_valid(params);
  const long long q_abs = std::llabs(params.q);
  const long long d = std::gcd(params.p, q_abs);

  VolumeBound bound;
  if (params.r <= d) {
    // Satellite with companion T(p/d, q/d); the twisted part is a torus
    // braid in a solid torus, so every hyperbolic piece is empty.
    bound.satellite = true;
    bound.companion = {params.p / d, params.q / d};
    bound.v3_units = 0;
    bound.theorem_units = 0;
    bound.case_tag = "satellite: volume zero";
    finish(bound);
    return bound;
  }

  const ReducedModel model = reduce(params.p, q_abs, params.r, params.s);
  const long long count =
      model.s_prime == 0
          ? tetra_count_torus(model.n, model.m, params.r)
          : tetra_count_twisted(model.n, model.m, params.r, model.s_prime,
                                params.root);
  bound.reduced = model;
  bound.v3_units = count;

  if (params.r == 2) {
    bound.theorem_units = 10;
    bound.case_tag = "r = 2";
  } else if (model.s_prime == 0) {
    bound.theorem_units = 2 * params.r + 10;
    bound.case_tag = "s = 0 mod r";
  } else if (params.root.is_standard()) {
    bound.theorem_units = params.r * params.r + params.r + 10;
    bound.case_tag = "standard root";
  } else {
    bound.theorem_units = params.r * params.r + 4 * params.r + 4;
    bound.case_tag = "generic root";
  }
  finish(bound);
  return bound;
}

VolumeBound volume_bound_dual(const TwistedTorusParams& params) {
  require_valid(params);
  const long long q_abs = std::llabs(params.q);
  if (!params.root.is_standard() || params.q * params.s <= 0 ||
      params.p <= params.r)
    fail(Errc::DualityNotApplicable,
         "duality bound needs standard roots, q*s > 0 and p > r");

  VolumeBound bound;
  if (q_abs == 2) {
    bound.v3_units = 10;
    bound.case_tag = "dual: q = 2";
  } else if (mod_floor(params.p, q_abs) == params.r) {
    bound.v3_units = 2 * q_abs + 10;
    bound.case_tag = "dual: p mod q = r";
  } else {
    bound.v3_units = q_abs * q_abs + q_abs + 10;
    bound.case_tag = "dual: generic";
  }
  bound.theorem_units = bound.v3_units;
  finish(bound);
  return bound;
}

VolumeBound best_volume_bound(const TwistedTorusParams& params) {
  VolumeBound best = volume_bound_ttl(params);
  try {
    VolumeBound dual = volume_bound_dual(params);
    if (dual.v3_units < best.v3_units) best = dual;
  } catch (const Error& e) {
    if (e.code() != Errc::DualityNotApplicable) throw;
  }
  return best;
}

namespace {

void require_stages(const TLinkSpec& spec) {
  require_valid(spec);
  if (spec.stages.empty())
    fail(Errc::InvalidArgument,
         "tetrahedron counts need at least one twisted stage");
}

}  // namespace

long long tetra_count_tlink0(const TLinkSpec& spec) {
  require_stages(spec);
  long long count = 0;
  for (const TLinkStage& stage : spec.stages) {
    if (mod_floor(stage.s, stage.r) != 0)
      fail(Errc::WrongCase,
           "stage has s' != 0; use the mixed-stage tetrahedron count");
    count += 2 * (stage.r + 1);
  }
  count += 6 * static_cast<long long>(spec.stages.size()) + 2;
  return count;
}

long long tetra_count_tlink(const TLinkSpec& spec) {
  require_stages(spec);
  long long count = 0;
  long long side_edges = 0;
  bool any_twisted = false;
  for (const TLinkStage& stage : spec.stages) {
    const long long r = stage.r;
    const long long s_prime = mod_floor(stage.s, r);
    side_edges += 2 * s_prime;
    count += 2 * (r + 1);  // the pair of flattened half-disks
    if (s_prime == 0) continue;  // no braiding left in this region
    any_twisted = true;
    count += (r - 3) * (s_prime - 1) + (r - 2);  // medial tetrahedra
    count += 4 * (r - 2);                        // coned peripheral faces
  }
  if (!any_twisted)
    fail(Errc::WrongCase, "all stages have s' = 0; use tetra_count_tlink0");
  count += 6 * static_cast<long long>(spec.stages.size()) + 2 + side_edges;
  return count;
}

namespace {

Rat tlink_theorem_units(long long r1, bool all_zero) {
  if (all_zero) return Rat(r1 * r1 + 9 * r1 - 8);
  // r1^3/3 + 5 r1^2/2 + 5 r1 - 5
  return Rat(2 * r1 * r1 * r1 + 15 * r1 * r1 + 30 * r1 - 30, 6);
}

}  // namespace

VolumeBound volume_bound_tlink(const TLinkSpec& spec) {
  require_stages(spec);
  const long long q_abs = std::llabs(spec.q);
  const long long d = std::gcd(spec.p, q_abs);
  const long long r1 = spec.stages.front().r;

  if (r1 <= d) {
    // Satellite with companion T(p/d, q/d); only the solid-torus part
    // T((r_1,s_1),...,(r_k,s_k)) can carry volume.
    VolumeBound bound;
    if (spec.stages.size() == 1) {
      bound.v3_units = 0;
      bound.theorem_units = 0;
      bound.case_tag = "satellite: volume zero";
    } else {
      TLinkSpec inner;
      inner.p = r1;
      inner.q = spec.stages.front().s;
      inner.stages.assign(spec.stages.begin() + 1, spec.stages.end());
      bound = volume_bound_tlink(inner);
      bound.case_tag = "satellite: " + bound.case_tag;
    }
    bound.satellite = true;
    bound.companion = {spec.p / d, spec.q / d};
    finish(bound);
    return bound;
  }

  bool all_zero = true;
  for (const TLinkStage& stage : spec.stages)
    if (mod_floor(stage.s, stage.r) != 0) all_zero = false;

  if (auto params = as_twisted_torus(spec)) {
    // A single stage is a twisted torus link; its reduction-based count is
    // at least as sharp as the T-link counts.
    VolumeBound bound = volume_bound_ttl(*params);
    bound.theorem_units = tlink_theorem_units(r1, all_zero);
    finish(bound);
    return bound;
  }

  VolumeBound bound;
  bound.v3_units = all_zero ? tetra_count_tlink0(spec) : tetra_count_tlink(spec);
  bound.case_tag = all_zero ? "T-link: all s_i = 0 mod r_i" : "T-link: mixed";
  bound.theorem_units = tlink_theorem_units(r1, all_zero);
  finish(bound);
  return bound;
}

}  // namespace ttlink
