#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ttlink/bounds.hpp"
#include "ttlink/diagram.hpp"
#include "ttlink/serialize.hpp"

using namespace ttlink;

namespace {

struct CommandResult {
  json payload;
  std::vector<std::string> diagnostics;
  std::string human;
};

bool g_json = false;

void emit(const CommandResult& result) {
  if (g_json) {
    json out = result.payload;
    if (!result.diagnostics.empty()) out["diagnostics"] = result.diagnostics;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << result.human;
    for (const std::string& note : result.diagnostics)
      std::cerr << "note: " << note << "\n";
  }
}

unsigned sweep_threads() {
  if (const char* cap = std::getenv("TTLINK_THREADS")) {
    long value = std::strtol(cap, nullptr, 10);
    if (value >= 1) return static_cast<unsigned>(value);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

// Deterministic parallel map: workers pull indices, results land by slot.
template <typename Body>
void parallel_for(std::size_t count, const Body& body) {
  const unsigned threads = std::min<std::size_t>(sweep_threads(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (std::thread& worker : pool) worker.join();
}

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TLinkSpec parse_spec_text(const std::string& text) {
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.rfind("T(", 0) == 0 || trimmed.rfind("T (", 0) == 0)
    return parse_tlink(trimmed);
  try {
    return json::parse(trimmed).get<TLinkSpec>();
  } catch (const json::exception& e) {
    fail(Errc::InvalidArgument,
         std::string("spec is neither T(...) text nor JSON: ") + e.what());
  }
}

TLinkSpec load_spec_argument(const std::string& argument) {
  if (argument.rfind("T(", 0) == 0) return parse_tlink(argument);
  if (!argument.empty() && argument.front() == '@')
    return parse_spec_text(read_input_file(argument.substr(1)));
  return parse_spec_text(read_input_file(argument));
}

TwistedTorusParams make_params(long long p, long long q, long long r,
                               long long s, const std::string& root_text) {
  TwistedTorusParams params;
  params.p = p;
  params.q = q;
  params.r = r;
  params.s = s;
  params.root = parse_root(root_text, static_cast<int>(r));
  require_valid(params);
  return params;
}

std::string root_family(const RootSubset& root) {
  if (root.is_delta_bar()) return "deltabar";
  if (root.is_delta()) return "delta";
  return format_subset(root);
}

std::string format_volume(const VolumeBound& bound) {
  std::ostringstream out;
  out << "Vol < " << format_rational(bound.v3_units) << " v3 = " << bound.decimal
      << "   [" << bound.case_tag << "; theorem level "
      << format_rational(bound.theorem_units) << " v3 = " << bound.theorem_decimal
      << "]\n";
  if (bound.satellite && bound.companion)
    out << "satellite with companion T(" << bound.companion->first << ","
        << bound.companion->second << ")\n";
  return out.str();
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_roots(int n, bool verify) {
  CommandResult result;
  const std::vector<RootSubset> subsets = enumerate_root_subsets(n);
  std::ostringstream human;
  human << "positive " << n << "-th roots of the full twist in B_" << n << ": "
        << subsets.size() << "\n";
  json entries = json::array();
  for (const RootSubset& subset : subsets) {
    const BraidWord word = subset_to_word(subset);
    json entry;
    entry["J"] = subset.members;
    entry["word"] =
        n <= 10 ? compact_braid_word(word) : format_braid_word(word);
    if (verify) entry["verified"] = is_positive_root(word);
    entries.push_back(entry);
    human << "  " << format_subset(subset) << "  "
          << (n <= 10 ? compact_braid_word(word) : format_braid_word(word));
    if (verify) human << "  (beta^n = full twist: yes)";
    human << "\n";
  }
  if (verify)
    for (const json& entry : entries)
      if (!entry["verified"].get<bool>())
        fail(Errc::Internal, "enumerated word failed root verification");
  result.payload = json{{"n", n}, {"count", subsets.size()}, {"roots", entries}};
  result.human = human.str();
  emit(result);
}

void cmd_root_classify(const std::string& text) {
  BraidWord word = parse_braid_word(text);
  RootSubset subset = word_to_subset(word);
  BraidWord canonical = subset_to_word(subset);
  CommandResult result;
  result.payload = json{
      {"n", subset.strands},
      {"J", subset.members},
      {"canonical", subset.strands <= 10 ? compact_braid_word(canonical)
                                         : format_braid_word(canonical)},
      {"family", root_family(subset)},
      {"is_root", is_positive_root(word)}};
  std::ostringstream human;
  human << "word " << text << " in B_" << subset.strands << ": "
        << format_subset(subset) << ", canonical "
        << result.payload["canonical"].get<std::string>() << "\n";
  result.human = human.str();
  emit(result);
}

void cmd_reduce(long long p, long long q, long long r, long long s) {
  ReducedModel model = reduce(p, q, r, s);
  CommandResult result;
  result.payload = model;
  const long long slot_a = model.swapped ? model.m : model.n;
  const long long slot_b = model.swapped ? model.n : model.m;
  std::ostringstream human;
  human << "M(" << p << "," << q << "," << r << "," << s << ") ~ M(" << slot_a
        << "," << slot_b << "," << r << "," << model.s_prime << ")  cf=[";
  for (std::size_t i = 0; i < model.cf.size(); ++i)
    human << (i ? "," : "") << model.cf[i];
  human << "]\n";
  result.human = human.str();
  emit(result);
}

void cmd_faces(const std::string& root_text, int r_hint, int s, bool brute,
               bool dump) {
  RootSubset root = parse_root(root_text, r_hint);
  FaceCensus census =
      brute ? face_census_bruteforce(root, s) : face_census_closed(root, s);
  CommandResult result;
  result.payload = json{{"root", root},
                        {"s", s},
                        {"method", brute ? "bruteforce" : "closed"},
                        {"census", census}};
  std::ostringstream human;
  human << "faces of beta^" << s << " for " << format_subset(root) << " ("
        << (brute ? "bruteforce" : "closed form") << "): B=" << census.bigons
        << " T_p=" << census.triangles_peripheral
        << " T_i=" << census.triangles_inner
        << " Q_p=" << census.quads_peripheral
        << " Q_i=" << census.quads_inner << "\n";
  if (dump) {
    const std::string text = dump_faces(build_projection(root, s));
    result.payload["dump"] = text;
    human << text;
  }
  result.human = human.str();
  emit(result);
}

void cmd_bound_ttl(long long p, long long q, long long r, long long s,
                   const std::string& root_text) {
  TwistedTorusParams params = make_params(p, q, r, s, root_text);
  VolumeBound bound = volume_bound_ttl(params);
  CommandResult result;
  result.payload = bound;
  result.payload["p"] = p;
  result.payload["q"] = q;
  result.payload["r"] = r;
  result.payload["s"] = s;
  result.payload["root"] = root_family(params.root);
  try {
    VolumeBound dual = volume_bound_dual(params);
    result.payload["dual_v3_units"] = format_rational(dual.v3_units);
    result.payload["dual_upper"] = dual.decimal;
    if (dual.v3_units < bound.v3_units) {
      result.payload["best_v3_units"] = format_rational(dual.v3_units);
      result.payload["best_upper"] = dual.decimal;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::DualityNotApplicable) throw;
  }
  if (!result.payload.contains("best_v3_units")) {
    result.payload["best_v3_units"] = format_rational(bound.v3_units);
    result.payload["best_upper"] = bound.decimal;
  }
  std::ostringstream human;
  human << "T(" << p << "," << q << "," << r << "," << s
        << ") root=" << root_family(params.root) << ": " << format_volume(bound);
  result.human = human.str();
  emit(result);
}

void cmd_bound_tlink(const std::string& spec_argument) {
  TLinkSpec spec = load_spec_argument(spec_argument);
  VolumeBound bound = volume_bound_tlink(spec);
  CommandResult result;
  result.payload = bound;
  result.payload["spec"] = spec;
  result.payload["lorenz"] = is_lorenz(spec);
  std::ostringstream human;
  human << format_tlink(spec) << ": " << format_volume(bound);
  result.human = human.str();
  emit(result);
}

void cmd_braid_word(const std::string& spec_argument) {
  TLinkSpec spec = load_spec_argument(spec_argument);
  BraidWord word = to_braid_word(spec);
  CommandResult result;
  result.payload = json{{"spec", spec},
                        {"strands", word.strands()},
                        {"letters", word.letters()},
                        {"word", format_braid_word(word)},
                        {"length", word.size()},
                        {"components", component_count(spec)},
                        {"lorenz", is_lorenz(spec)}};
  std::ostringstream human;
  human << format_tlink(spec) << " = closure of " << format_braid_word(word)
        << "\n" << word.size() << " letters, "
        << result.payload["components"].get<long long>() << " component(s)\n";
  result.human = human.str();
  emit(result);
}

void cmd_braid_index(long long p, long long q, long long r, long long s,
                     const std::string& root_text) {
  TwistedTorusParams params = make_params(p, q, r, s, root_text);
  long long index = braid_index(params);
  CommandResult result;
  result.payload = json{{"p", p},       {"q", q},
                        {"r", r},       {"s", s},
                        {"root", root_family(params.root)},
                        {"braid_index", index},
                        {"case", r <= q ? "r <= q: min(p,q)" : "r >= q: min(s+q,r)"}};
  std::ostringstream human;
  human << "braid index of T(" << p << "," << q << "," << r << "," << s
        << ") = " << index << "\n";
  result.human = human.str();
  emit(result);
}

void cmd_dual(long long p, long long q, long long r, long long s,
              const std::string& root_text) {
  TwistedTorusParams params = make_params(p, q, r, s, root_text);
  TwistedTorusParams dual = lorenz_dual(params);
  CommandResult result;
  result.payload = json{{"p", dual.p},
                        {"q", dual.q},
                        {"r", dual.r},
                        {"s", dual.s},
                        {"root", root_family(dual.root)}};
  std::ostringstream human;
  human << "T(" << p << "," << q << "," << r << "," << s << ") = T(" << dual.p
        << "," << dual.q << "," << dual.r << "," << dual.s
        << ")  [root family " << root_family(dual.root) << "]\n";
  result.human = human.str();
  emit(result);
}

// ---- sweeps ---------------------------------------------------------------

struct SweepOutcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

void emit_sweep(const std::string& name, const SweepOutcome& outcome) {
  CommandResult result;
  result.payload = json{{"sweep", name},
                        {"cases", outcome.cases},
                        {"failures", outcome.failures}};
  std::ostringstream human;
  human << "sweep " << name << ": " << outcome.cases << " cases, "
        << outcome.failures.size() << " failure(s)\n";
  for (const std::string& failure : outcome.failures)
    human << "  FAIL " << failure << "\n";
  result.human = human.str();
  emit(result);
  if (!outcome.failures.empty())
    fail(Errc::Internal, "sweep detected failures");
}

void sweep_roots(int max_n, int verify_max) {
  SweepOutcome outcome;
  for (int n = 2; n <= max_n; ++n) {
    const std::vector<RootSubset> subsets = enumerate_root_subsets(n);
    ++outcome.cases;
    if (subsets.size() != (1ull << (n - 2)))
      outcome.failures.push_back("count mismatch at n=" + std::to_string(n));
    std::set<std::vector<int>> images;
    for (const RootSubset& subset : subsets) {
      ++outcome.cases;
      const BraidWord word = subset_to_word(subset);
      images.insert(permutation_of(word).images());
      if (!(word_to_subset(word) == subset))
        outcome.failures.push_back("roundtrip failed for " + format_subset(subset));
      if (n <= verify_max && !is_positive_root(word))
        outcome.failures.push_back("verification failed for " + format_subset(subset));
    }
    if (images.size() != subsets.size())
      outcome.failures.push_back("permutation collision at n=" + std::to_string(n));
  }
  emit_sweep("roots", outcome);
}

void sweep_faces(int min_r, int max_r, int max_s) {
  struct Case {
    RootSubset subset;
    int s;
  };
  std::vector<Case> cases;
  for (int r = min_r; r <= max_r; ++r)
    for (const RootSubset& subset : enumerate_root_subsets(r))
      for (int s = 1; s <= max_s; ++s) cases.push_back({subset, s});

  std::vector<std::string> problems(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& [subset, s] = cases[i];
    const int r = subset.strands;
    FaceCensus brute = face_census_bruteforce(subset, s);
    FaceCensus closed = face_census_closed(subset, s);
    std::string tag = format_subset(subset) + " s=" + std::to_string(s);
    if (!(brute == closed)) {
      problems[i] = "oracle mismatch for " + tag;
      return;
    }
    const int c = s * (r - 1);
    const bool invariants_hold =
        brute.total() == c + r - 1 &&
        brute.quads() == (brute.bigons - 2) + (r - 3) * (s - 1) &&
        brute.quads_peripheral == brute.bigons - 2 &&
        brute.quads_peripheral <= r - 2 &&
        brute.quads_peripheral + brute.triangles_peripheral <= 2 * (r - 2);
    if (!invariants_hold) problems[i] = "census invariant failed for " + tag;
  });

  SweepOutcome outcome;
  outcome.cases = cases.size();
  for (const std::string& problem : problems)
    if (!problem.empty()) outcome.failures.push_back(problem);
  emit_sweep("faces", outcome);
}

void sweep_reduction(int samples, long long max_pq, unsigned long seed) {
  SweepOutcome outcome;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw(1, max_pq);
  while (outcome.cases < static_cast<std::size_t>(samples)) {
    long long p = draw(rng), q = draw(rng);
    long long g = std::gcd(p, q);
    long long lo = std::max<long long>(2, g + 1);
    if (lo > p + q) continue;
    std::uniform_int_distribution<long long> draw_r(lo, std::min(p + q, lo + 1000));
    long long r = draw_r(rng);
    long long s = static_cast<long long>(rng() % (2 * max_pq + 1)) - max_pq;
    ++outcome.cases;
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) +
                            "," + std::to_string(r) + "," + std::to_string(s) + ")";
    ReducedModel model = reduce(p, q, r, s);
    if (!(model.n > 0 && model.m > 0 && model.n < r && model.m < r &&
          model.n + model.m >= r && model.s_prime == mod_floor(s, r))) {
      outcome.failures.push_back("window invariant failed for " + tag);
      continue;
    }
    Fraction ratio = reconstruct(model.cf, model.m, model.n);
    if (ratio.num * q != ratio.den * p)
      outcome.failures.push_back("reconstruction failed for " + tag);
    ReducedModel twisted = reduce(p, q + p, r, s);
    if (std::minmax(twisted.n, twisted.m) != std::minmax(model.n, model.m) ||
        twisted.s_prime != model.s_prime)
      outcome.failures.push_back("Dehn twist invariance failed for " + tag);
  }
  emit_sweep("reduction", outcome);
}

void sweep_bounds(long long max_r) {
  SweepOutcome outcome;
  for (long long r = 3; r <= std::max<long long>(max_r, 50); ++r) {
    ++outcome.cases;
    long long max_standard = 0, max_generic = 0;
    for (long long s = 1; s < r; ++s) {
      max_standard = std::max(
          max_standard,
          tetra_count_twisted(r - 1, 1, r, s, RootSubset::standard(static_cast<int>(r))));
      if (r >= 4)
        max_generic = std::max(
            max_generic,
            tetra_count_twisted(r - 1, 1, r, s, RootSubset(static_cast<int>(r), {1})));
    }
    if (max_standard != r * r + r + 10)
      outcome.failures.push_back("standard-root maximum off at r=" + std::to_string(r));
    if (r >= 4 && max_generic != r * r + 4 * r + 4)
      outcome.failures.push_back("generic-root maximum off at r=" + std::to_string(r));
  }
  for (long long r = 2; r <= max_r; ++r)
    for (long long n = 1; n < r; ++n)
      for (long long m = std::max<long long>(1, r - n); m < r; ++m) {
        ++outcome.cases;
        if (tetra_count_torus(n, m, r) > 2 * r + 10)
          outcome.failures.push_back("torus count exceeds theorem at r=" + std::to_string(r));
      }
  emit_sweep("bounds", outcome);
}

void sweep_duality(long long max_p) {
  SweepOutcome outcome;
  for (long long p = 3; p <= max_p; ++p)
    for (long long q = 2; q <= max_p; ++q)
      for (long long r = 2; r < p; ++r)
        for (long long s = 1; s <= 4; ++s)
          for (bool use_delta : {false, true}) {
            ++outcome.cases;
            TwistedTorusParams params{
                p, q, r, s,
                use_delta ? RootSubset::standard(static_cast<int>(r))
                          : RootSubset::standard_bar(static_cast<int>(r))};
            const std::string tag = "T(" + std::to_string(p) + "," +
                                    std::to_string(q) + "," + std::to_string(r) +
                                    "," + std::to_string(s) + ")";
            TwistedTorusParams dual = lorenz_dual(params);
            TwistedTorusParams back = lorenz_dual(dual);
            if (back.p != p || back.q != q || back.r != r || back.s != s)
              outcome.failures.push_back("involution failed for " + tag);
            if (braid_index(params) != braid_index(dual))
              outcome.failures.push_back("braid index not dual-invariant for " + tag);
            if (component_count(params) != component_count(dual))
              outcome.failures.push_back("components not dual-invariant for " + tag);
          }
  emit_sweep("duality", outcome);
}

json error_payload(const std::string& code, const std::string& message) {
  return json{{"status", "error"},
              {"code", code},
              {"message", message},
              {"diagnostics", json::array({message})}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted torus links: roots, censuses, reductions and volume bounds"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine readable output");

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "enumerate positive n-th roots of the full twist");
  roots_cmd->fallthrough();
  int roots_n = 5;
  bool roots_verify = false;
  roots_cmd->add_option("--n", roots_n, "strand count")->required();
  roots_cmd->add_flag("--verify", roots_verify, "check beta^n = full twist via normal form");
  roots_cmd->callback([&] { cmd_roots(roots_n, roots_verify); });

  // root-classify
  auto* classify_cmd = app.add_subcommand("root-classify", "subset normal form of a root word");
  classify_cmd->fallthrough();
  std::string classify_word;
  classify_cmd->add_option("word", classify_word, "braid word, compact or 'n: i1 i2 ...'")->required();
  classify_cmd->callback([&] { cmd_root_classify(classify_word); });

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "continued-fraction reduction of M(p,q,r,s)");
  reduce_cmd->fallthrough();
  long long rp = 0, rq = 0, rr = 0, rs = 0;
  reduce_cmd->add_option("p", rp)->required();
  reduce_cmd->add_option("q", rq)->required();
  reduce_cmd->add_option("r", rr)->required();
  reduce_cmd->add_option("s", rs)->required();
  reduce_cmd->callback([&] { cmd_reduce(rp, rq, rr, rs); });

  // faces
  auto* faces_cmd = app.add_subcommand("faces", "face census of the braid projection region");
  faces_cmd->fallthrough();
  std::string faces_root;
  int faces_r = 0, faces_s = 1;
  bool faces_brute = false, faces_closed = false, faces_dump = false;
  faces_cmd->add_option("--root", faces_root, "root: word, subset form, delta or deltabar")->required();
  faces_cmd->add_option("--r", faces_r, "strand count, for delta/deltabar roots");
  faces_cmd->add_option("--s", faces_s, "power of the root")->required();
  faces_cmd->add_flag("--brute", faces_brute, "build the projection complex");
  faces_cmd->add_flag("--closed", faces_closed, "use the closed-form census (default)");
  faces_cmd->add_flag("--dump", faces_dump, "include the face list");
  faces_cmd->callback([&] {
    if (faces_brute && faces_closed)
      fail(Errc::InvalidArgument, "--brute and --closed are mutually exclusive");
    cmd_faces(faces_root, faces_r, faces_s, faces_brute, faces_dump);
  });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "volume upper bounds");
  bound_cmd->require_subcommand(1);
  bound_cmd->fallthrough();
  auto* bound_ttl_cmd = bound_cmd->add_subcommand("ttl", "twisted torus link bound");
  bound_ttl_cmd->fallthrough();
  long long bp = 0, bq = 0, br = 0, bs = 0;
  std::string bound_root = "deltabar";
  bound_ttl_cmd->add_option("p", bp)->required();
  bound_ttl_cmd->add_option("q", bq)->required();
  bound_ttl_cmd->add_option("r", br)->required();
  bound_ttl_cmd->add_option("s", bs)->required();
  bound_ttl_cmd->add_option("--root", bound_root, "delta, deltabar, word or subset form");
  bound_ttl_cmd->callback([&] { cmd_bound_ttl(bp, bq, br, bs, bound_root); });

  auto* bound_tlink_cmd = bound_cmd->add_subcommand("tlink", "T-link bound");
  bound_tlink_cmd->fallthrough();
  std::string tlink_spec;
  bound_tlink_cmd->add_option("spec", tlink_spec,
                              "T(...) text, @file, file path or - for stdin")->required();
  bound_tlink_cmd->callback([&] { cmd_bound_tlink(tlink_spec); });

  // braid-word
  auto* word_cmd = app.add_subcommand("braid-word", "positive braid realization of a T-link");
  word_cmd->fallthrough();
  std::string word_spec;
  word_cmd->add_option("spec", word_spec, "T(...) text, @file, file path or -")->required();
  word_cmd->callback([&] { cmd_braid_word(word_spec); });

  // braid-index
  auto* index_cmd = app.add_subcommand("braid-index", "minimal braid index (standard roots)");
  index_cmd->fallthrough();
  long long ip = 0, iq = 0, ir = 0, is = 0;
  std::string index_root = "deltabar";
  index_cmd->add_option("p", ip)->required();
  index_cmd->add_option("q", iq)->required();
  index_cmd->add_option("r", ir)->required();
  index_cmd->add_option("s", is)->required();
  index_cmd->add_option("--root", index_root);
  index_cmd->callback([&] { cmd_braid_index(ip, iq, ir, is, index_root); });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Lorenz dual parameters");
  dual_cmd->fallthrough();
  long long dp = 0, dq = 0, dr = 0, ds = 0;
  std::string dual_root = "deltabar";
  dual_cmd->add_option("p", dp)->required();
  dual_cmd->add_option("q", dq)->required();
  dual_cmd->add_option("r", dr)->required();
  dual_cmd->add_option("s", ds)->required();
  dual_cmd->add_option("--root", dual_root);
  dual_cmd->callback([&] { cmd_dual(dp, dq, dr, ds, dual_root); });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "invariant sweeps");
  sweep_cmd->require_subcommand(1);
  sweep_cmd->fallthrough();

  auto* sweep_roots_cmd = sweep_cmd->add_subcommand("roots");
  sweep_roots_cmd->fallthrough();
  int sw_max_n = 8, sw_verify_max = 8;
  sweep_roots_cmd->add_option("--max-n", sw_max_n);
  sweep_roots_cmd->add_option("--verify-max", sw_verify_max);
  sweep_roots_cmd->callback([&] { sweep_roots(sw_max_n, sw_verify_max); });

  auto* sweep_faces_cmd = sweep_cmd->add_subcommand("faces");
  sweep_faces_cmd->fallthrough();
  int sw_faces_min_r = 3, sw_faces_max_r = 7, sw_faces_max_s = 6;
  sweep_faces_cmd->add_option("--min-r", sw_faces_min_r);
  sweep_faces_cmd->add_option("--max-r", sw_faces_max_r);
  sweep_faces_cmd->add_option("--max-s", sw_faces_max_s);
  sweep_faces_cmd->callback(
      [&] { sweep_faces(sw_faces_min_r, sw_faces_max_r, sw_faces_max_s); });

  auto* sweep_reduction_cmd = sweep_cmd->add_subcommand("reduction");
  sweep_reduction_cmd->fallthrough();
  int sw_samples = 1000;
  long long sw_max_pq = 1'000'000;
  unsigned long sw_seed = 424242;
  sweep_reduction_cmd->add_option("--samples", sw_samples);
  sweep_reduction_cmd->add_option("--max-pq", sw_max_pq);
  sweep_reduction_cmd->add_option("--seed", sw_seed);
  sweep_reduction_cmd->callback(
      [&] { sweep_reduction(sw_samples, sw_max_pq, sw_seed); });

  auto* sweep_bounds_cmd = sweep_cmd->add_subcommand("bounds");
  sweep_bounds_cmd->fallthrough();
  long long sw_max_r = 12;
  sweep_bounds_cmd->add_option("--max-r", sw_max_r);
  sweep_bounds_cmd->callback([&] { sweep_bounds(sw_max_r); });

  auto* sweep_duality_cmd = sweep_cmd->add_subcommand("duality");
  sweep_duality_cmd->fallthrough();
  long long sw_max_p = 12;
  sweep_duality_cmd->add_option("--max-p", sw_max_p);
  sweep_duality_cmd->callback([&] { sweep_duality(sw_max_p); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  } catch (const Error& e) {
    if (g_json)
      std::cout << error_payload(errc_name(e.code()), e.what()).dump(2) << "\n";
    else
      std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (g_json)
      std::cout << error_payload("internal", e.what()).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
