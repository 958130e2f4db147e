// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ttlink/bounds.hpp"
#include "ttlink/diagram.hpp"
#include "ttlink/serialize.hpp"

using namespace ttlink;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
            << detail << "\n";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json cli_json(const std::string& args, int expected_exit, bool& ok) {
  const std::string command =
      std::string(TTLINK_CLI_BIN) + " " + args + " --json 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    ok = false;
    return {};
  }
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    out.append(buffer, got);
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (exit_code != expected_exit) ok = false;
  try {
    return json::parse(out);
  } catch (const json::exception&) {
    ok = false;
    return {};
  }
}

// --- criterion 1: root enumeration -----------------------------------------

void criterion_roots() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  for (int n = 2; n <= 10; ++n) {
    json payload = cli_json("roots --n " + std::to_string(n), 0, ok);
    if (!payload.contains("count") ||
        payload["count"].get<unsigned long>() != (1ul << (n - 2)))
      ok = false;
  }

  const std::map<std::string, std::vector<int>> table = {
      {"4321", {}},       {"1432", {1}},    {"2143", {2}},
      {"3214", {3}},      {"1243", {1, 2}}, {"1324", {1, 3}},
      {"2134", {2, 3}},   {"1234", {1, 2, 3}}};
  json five = cli_json("roots --n 5", 0, ok);
  std::map<std::string, std::vector<int>> seen;
  for (const auto& entry : five["roots"])
    seen[entry["word"].get<std::string>()] =
        entry["J"].get<std::vector<int>>();
  if (seen != table) ok = false;

  int verified = 0;
  for (int n = 2; n <= 8; ++n)
    for (const BraidWord& word : enumerate_roots(n)) {
      if (!is_positive_root(word)) ok = false;
      ++verified;
    }

  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) ok = false;
  detail << "roots --n 2..10 counts are 2^(n-2); the eight n=5 words and "
            "subsets match the classification; "
         << verified << " roots verified beta^n = full twist for n <= 8 ("
         << elapsed << " s < 30 s)";
  report(1, ok, detail.str());
}

// --- criterion 2: face census oracle equivalence ---------------------------

void criterion_faces() {
  const auto start = Clock::now();
  bool ok = true;
  int cases = 0;

  for (int r = 3; r <= 7; ++r) {
    for (const RootSubset& subset : enumerate_root_subsets(r)) {
      for (int s = 1; s <= 6; ++s) {
        ++cases;
        const FaceCensus brute = face_census_bruteforce(subset, s);
        const FaceCensus closed = face_census_closed(subset, s);
        if (!(brute == closed)) ok = false;
        const int c = s * (r - 1);
        if (brute.total() != c + r - 1) ok = false;
        if (brute.quads() != (brute.bigons - 2) + (r - 3) * (s - 1)) ok = false;
        if (brute.quads_peripheral != brute.bigons - 2) ok = false;
        if (brute.quads_peripheral > r - 2) ok = false;
        if (brute.quads_peripheral + brute.triangles_peripheral > 2 * (r - 2))
          ok = false;
        const ProjectionComplex complex = build_projection(subset, s);
        if (complex.euler_characteristic() != 1) ok = false;
        if (complex.edge_count != 2 * c + r) ok = false;
      }
    }
  }

  const FaceCensus instance = face_census_bruteforce(RootSubset(5, {}), 3);
  if (!(instance == FaceCensus{2, 6, 4, 0, 4})) ok = false;

  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) ok = false;
  std::ostringstream detail;
  detail << cases
         << " (J,r,s) cases: brute force equals closed form and every census "
            "satisfies Q=(B-2)+(r-3)(s-1), Q_p=B-2, Q_p<=r-2, "
            "Q_p+T_p<=2(r-2) and the Euler identities; deltabar_5^3 gives "
            "(Q_i,Q_p,T_i,T_p,B)=(4,0,4,6,2) ("
         << elapsed << " s < 60 s)";
  report(2, ok, detail.str());
}

// --- criterion 3: reduction ------------------------------------------------

void criterion_reduction() {
  const auto start = Clock::now();
  bool ok = true;

  const ReducedModel figure3 = reduce(3, 7, 5, 0);
  if (figure3.n != 3 || figure3.m != 4 || figure3.s_prime != 0) ok = false;

  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<long long> draw(1, 1'000'000);
  int cases = 0;
  while (cases < 1000) {
    const long long p = draw(rng), q = draw(rng);
    const long long g = std::gcd(p, q);
    const long long lo = std::max<long long>(2, g + 1);
    if (lo > p + q) continue;
    std::uniform_int_distribution<long long> draw_r(lo,
                                                    std::min(p + q, lo + 5000));
    const long long r = draw_r(rng);
    const long long s =
        static_cast<long long>(rng() % 2'000'001) - 1'000'000;
    ++cases;

    const ReducedModel model = reduce(p, q, r, s);
    if (!(model.n > 0 && model.n < r && model.m > 0 && model.m < r &&
          model.n + model.m >= r && model.s_prime == mod_floor(s, r)))
      ok = false;
    const Fraction ratio = reconstruct(model.cf, model.m, model.n);
    if (ratio.num * q != ratio.den * p) ok = false;

    const ReducedModel twisted = reduce(p, q + p, r, s);
    if (std::minmax(twisted.n, twisted.m) != std::minmax(model.n, model.m) ||
        twisted.s_prime != model.s_prime)
      ok = false;
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) ok = false;
  std::ostringstream detail;
  detail << "(3,7,5,0) -> (3,4,0); " << cases
         << " random (p,q,r,s) with p,q <= 1e6 satisfy the window "
            "invariants, reconstruct exactly, and are Dehn-twist invariant ("
         << elapsed << " s < 10 s)";
  report(3, ok, detail.str());
}

// --- criterion 4: theorem recovery from counts ------------------------------

void criterion_theorems() {
  bool ok = true;
  std::ostringstream detail;

  for (long long r = 3; r <= 50; ++r) {
    long long max_standard = 0, max_generic = 0;
    for (long long s = 1; s < r; ++s) {
      max_standard = std::max(
          max_standard, tetra_count_twisted(r - 1, 1, r, s,
                                            RootSubset::standard(static_cast<int>(r))));
      if (r >= 4)  // every subset at r=3 is standard
        max_generic = std::max(
            max_generic, tetra_count_twisted(r - 1, 1, r, s,
                                             RootSubset(static_cast<int>(r), {1})));
    }
    if (max_standard != r * r + r + 10) ok = false;
    if (r >= 4 && max_generic != r * r + 4 * r + 4) ok = false;
  }

  const VolumeBound two = volume_bound_ttl(
      TwistedTorusParams{7, 3, 2, 5, RootSubset::standard_bar(2)});
  if (two.v3_units != Rat(10)) ok = false;
  if (std::abs(two.decimal - 10.149416) > 1e-4) ok = false;

  for (long long r = 2; r <= 8; ++r) {
    TLinkSpec single;
    single.p = r + 1;
    single.q = 1;
    single.stages.push_back(
        TLinkStage{r, r, RootSubset::standard_bar(static_cast<int>(r))});
    if (tetra_count_tlink0(single) != 2 * r + 10) ok = false;
  }

  // Exhaustive T-link dominance for r1 <= 8: all strictly decreasing stage
  // vectors, s_i in 1..r_i (s_i = r_i exercises s_i' = 0).
  long long swept = 0;
  std::function<void(TLinkSpec&, long long)> recurse = [&](TLinkSpec& spec,
                                                           long long next_r) {
    if (!spec.stages.empty()) {
      ++swept;
      const long long r1 = spec.stages.front().r;
      bool all_zero = true;
      for (const TLinkStage& stage : spec.stages)
        if (stage.s % stage.r != 0) all_zero = false;
      if (all_zero) {
        if (Rat(tetra_count_tlink0(spec)) > Rat(r1 * r1 + 9 * r1 - 8))
          ok = false;
      } else {
        const Rat cubic(2 * r1 * r1 * r1 + 15 * r1 * r1 + 30 * r1 - 30, 6);
        if (Rat(tetra_count_tlink(spec)) > cubic) ok = false;
      }
    }
    for (long long r = next_r; r >= 2; --r)
      for (long long s = 1; s <= r; ++s) {
        spec.stages.push_back(
            TLinkStage{r, s, RootSubset::standard_bar(static_cast<int>(r))});
        recurse(spec, r - 1);
        spec.stages.pop_back();
      }
  };
  TLinkSpec spec;
  spec.p = 100;
  spec.q = 1;
  recurse(spec, 8);

  detail << "for 3<=r<=50 the twisted counts maximize to r^2+r+10 "
            "(standard) and r^2+4r+4 (generic, vacuous at r=3); r=2 bound "
            "is exactly 10 v3 = 10.149416 +- 1e-4; single full-twist stages "
            "count 2r+10; both T-link closed forms dominate "
         << swept << " exhaustive stage/s combinations with r1 <= 8";
  report(4, ok, detail.str());
}

// --- criterion 5: worked bound through the CLI ------------------------------

void criterion_worked_bound() {
  bool ok = true;
  json payload = cli_json("bound ttl 9 7 5 3 --root delta", 0, ok);
  if (!payload.contains("tetrahedra") || payload["tetrahedra"] != 36) ok = false;
  if (payload.value("v3_units", "") != "36") ok = false;
  const double upper = payload.value("volume_upper", 0.0);
  if (std::abs(upper - 36.54) > 0.01) ok = false;
  if (payload.value("theorem_v3_units", "") != "40") ok = false;
  if (!(upper < payload.value("theorem_upper", 0.0))) ok = false;
  std::ostringstream detail;
  detail << "bound ttl 9 7 5 3 --root delta reports 36 tetrahedra, upper "
            "bound 36 v3 = "
         << upper << " ~ 36.54, strictly below the theorem-level 40 v3";
  report(5, ok, detail.str());
}

// --- criterion 6: duality and braid index -----------------------------------

void criterion_duality() {
  bool ok = true;

  const TwistedTorusParams base{5, 3, 2, 4, RootSubset::standard_bar(2)};
  const TwistedTorusParams dual = lorenz_dual(base);
  if (dual.p != 7 || dual.q != 2 || dual.r != 3 || dual.s != 3) ok = false;
  const TwistedTorusParams back = lorenz_dual(dual);
  if (back.p != 5 || back.q != 3 || back.r != 2 || back.s != 4) ok = false;
  if (braid_index(base) != 3 || braid_index(dual) != 3) ok = false;
  if (component_count(base) != component_count(dual)) ok = false;

  for (long long p = 3; p <= 12; ++p)
    for (long long q = 2; q <= 8; ++q)
      for (long long r = 2; r < p; ++r)
        for (long long s = 1; s <= 3; ++s) {
          const TwistedTorusParams params{
              p, q, r, s, RootSubset::standard_bar(static_cast<int>(r))};
          const TwistedTorusParams d = lorenz_dual(params);
          const TwistedTorusParams b = lorenz_dual(d);
          if (b.p != p || b.q != q || b.r != r || b.s != s) ok = false;
          if (braid_index(params) != braid_index(d)) ok = false;
          if (component_count(params) != component_count(d)) ok = false;
        }

  long long max_index = 0;
  Rat max_units(0);
  for (long long p = 3; p <= 50; ++p)
    for (long long q = 3; q <= 50; ++q)
      for (long long s : {1ll, 6ll}) {
        const TwistedTorusParams params{p, q, 2, s, RootSubset::standard_bar(2)};
        const long long index = braid_index(params);
        if (index != std::min(p, q)) ok = false;
        max_index = std::max(max_index, index);
        const VolumeBound bound = volume_bound_ttl(params);
        if (bound.v3_units > Rat(10)) ok = false;
        if (std::gcd(p, q) == 1 && bound.v3_units != Rat(10)) ok = false;
        max_units = std::max(max_units, bound.v3_units);
      }
  if (max_index != 50 || max_units != Rat(10)) ok = false;

  std::ostringstream detail;
  detail << "lorenz_dual(T(5,3,2,4)) = T(7,2,3,3), an involution with braid "
            "index 3 and equal component counts on both sides; for "
            "3<=p,q<=50 braid_index(T(p,q,2,s)) = min(p,q) grows to "
         << max_index << " while the volume bound never exceeds 10 v3";
  report(6, ok, detail.str());
}

// --- criterion 7: scope note -------------------------------------------------

void criterion_scope_note() {
  // Geometric sharpness (volumes approaching 10 v3, unbounded volumes from
  // annular twisting) needs a hyperbolic structure solver and stays out of
  // scope; the suites above pin the constants it would converge to.
  bool ok = true;
  if (std::abs(kV3 - 1.0149416064096536) > 1e-15) ok = false;
  if (std::abs(10 * kV3 - 10.149416064096536) > 1e-12) ok = false;
  report(7, ok,
         "hyperbolic sharpness results are out of scope by design; the "
         "limiting constant 10 v3 = 10.1494160641 is exposed and pinned");
}

}  // namespace

int main() {
  criterion_roots();
  criterion_faces();
  criterion_reduction();
  criterion_theorems();
  criterion_worked_bound();
  criterion_duality();
  criterion_scope_note();
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
