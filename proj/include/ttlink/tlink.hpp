#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttlink/braid.hpp"
#include "ttlink/roots.hpp"

namespace ttlink {

// T(p,q,r,s) with a chosen positive root on r strands.
struct TwistedTorusParams {
  long long p = 2;
  long long q = 1;
  long long r = 2;
  long long s = 1;
  RootSubset root = RootSubset(2, {});
};

struct TLinkStage {
  long long r = 2;
  long long s = 1;
  RootSubset root = RootSubset(2, {});
};

// T((p,q),(r_1,s_1,beta_1),...,(r_k,s_k,beta_k)) with r_1 > ... > r_k >= 2.
struct TLinkSpec {
  long long p = 2;
  long long q = 1;
  std::vector<TLinkStage> stages;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const TwistedTorusParams& params);
ValidationReport validate(const TLinkSpec& spec);
void require_valid(const TwistedTorusParams& params);
void require_valid(const TLinkSpec& spec);

TLinkSpec as_tlink(const TwistedTorusParams& params);
std::optional<TwistedTorusParams> as_twisted_torus(const TLinkSpec& spec);

// The positive braid whose closure is the T-link:
// (delta_p)^q beta_1^{s_1} ... beta_k^{s_k}, each beta_i on the first r_i
// strands. Requires q > 0, all s_i > 0 and r_1 <= p; the one classical
// exception is a single stage with r | s and r <= q, which is realized on q
// strands instead.
BraidWord to_braid_word(const TLinkSpec& spec);
BraidWord to_braid_word(const TwistedTorusParams& params);

long long component_count(const TLinkSpec& spec);
long long component_count(const TwistedTorusParams& params);

struct SatelliteInfo {
  bool satellite = false;
  long long companion_p = 0;
  long long companion_q = 0;
};

SatelliteInfo is_satellite(const TLinkSpec& spec);
SatelliteInfo is_satellite(const TwistedTorusParams& params);

// Certificate check: positive parameters and every root equal to
// delta_bar. False only means "not certified Lorenz by this criterion".
bool is_lorenz(const TLinkSpec& spec);

// T(p,q,r,s) = T(q+s, r, q, p-r) for q,s > 0, p > r, standard roots.
TwistedTorusParams lorenz_dual(const TwistedTorusParams& params);

long long braid_index(const TwistedTorusParams& params);

// Text form "T(p,q)", "T(p,q,r,s)", or "T((p,q),(r1,s1[,root1]),...)".
// Stage roots default to deltabar and may be given as "delta", "deltabar"
// or "{j1,j2,...}".
TLinkSpec parse_tlink(std::string_view text);
std::string format_tlink(const TLinkSpec& spec);

}  // namespace ttlink
