#include "ttlink/tlink.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ttlink {

namespace {

void check_root(const RootSubset& root, long long r,
                std::vector<std::string>& violations, const std::string& who) {
  if (root.strands != r)
    violations.push_back(who + ": root lives on " +
                         std::to_string(root.strands) + " strands, not " +
                         std::to_string(r));
}

}  // namespace

ValidationReport validate(const TwistedTorusParams& params) {
  ValidationReport report;
  if (params.p <= 0) report.violations.push_back("p must be positive");
  if (params.q == 0) report.violations.push_back("q must be nonzero");
  if (params.s == 0) report.violations.push_back("s must be nonzero");
  if (params.r <= 1) report.violations.push_back("r must exceed 1");
  if (params.r > params.p + std::llabs(params.q))
    report.violations.push_back("r must not exceed p + |q|");
  check_root(params.root, params.r, report.violations, "root");
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(const TLinkSpec& spec) {
  ValidationReport report;
  if (spec.p <= 0) report.violations.push_back("p must be positive");
  if (spec.q == 0) report.violations.push_back("q must be nonzero");
  // An empty stage list degenerates to the torus link T(p,q).
  long long previous_r = 0;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const TLinkStage& stage = spec.stages[i];
    const std::string who = "stage " + std::to_string(i + 1);
    if (stage.s == 0) report.violations.push_back(who + ": s must be nonzero");
    if (stage.r < 2) report.violations.push_back(who + ": r must be at least 2");
    if (i > 0 && stage.r >= previous_r)
      report.violations.push_back(who + ": r values must strictly decrease");
    check_root(stage.root, stage.r, report.violations, who);
    previous_r = stage.r;
  }
  if (!spec.stages.empty() &&
      spec.stages.front().r > spec.p + std::llabs(spec.q))
    report.violations.push_back("r_1 must not exceed p + |q|");
  report.ok = report.violations.empty();
  return report;
}

namespace {

void require(const ValidationReport& report) {
  if (report.ok) return;
  std::string message = "invalid parameters:";
  for (const std::string& violation : report.violations)
    message += " " + violation + ";";
  fail(Errc::InvalidArgument, message);
}

}  // namespace

void require_valid(const TwistedTorusParams& params) { require(validate(params)); }
void require_valid(const TLinkSpec& spec) { require(validate(spec)); }

TLinkSpec as_tlink(const TwistedTorusParams& params) {
  TLinkSpec spec;
  spec.p = params.p;
  spec.q = params.q;
  spec.stages.push_back(TLinkStage{params.r, params.s, params.root});
  return spec;
}

std::optional<TwistedTorusParams> as_twisted_torus(const TLinkSpec& spec) {
  if (spec.stages.size() != 1) return std::nullopt;
  const TLinkStage& stage = spec.stages.front();
  return TwistedTorusParams{spec.p, spec.q, stage.r, stage.s, stage.root};
}

BraidWord to_braid_word(const TLinkSpec& spec) {
  require_valid(spec);
  if (spec.q < 0 || std::any_of(spec.stages.begin(), spec.stages.end(),
                                [](const TLinkStage& st) { return st.s < 0; })) {
    const bool all_negative =
        spec.q < 0 && std::all_of(spec.stages.begin(), spec.stages.end(),
                                  [](const TLinkStage& st) { return st.s < 0; });
    if (all_negative) {
      TLinkSpec mirror = spec;
      mirror.q = -mirror.q;
      for (TLinkStage& stage : mirror.stages) stage.s = -stage.s;
      fail(Errc::MirrorRequired,
           "all twists are negative; realize the mirror image " +
               format_tlink(mirror) + " and reverse all crossings");
    }
    fail(Errc::UnsupportedRealization,
         "mixed twist signs admit no positive braid realization");
  }

  long long strands = spec.p;
  long long turns = spec.q;
  if (!spec.stages.empty() && spec.stages.front().r > spec.p) {
    // Full twists make the root irrelevant, and T(p,q,r,s) = T(q,p,r,s)
    // when r divides s, so a single such stage can run on q strands.
    const long long r1 = spec.stages.front().r;
    const bool full_twist_stage =
        spec.stages.size() == 1 && spec.stages.front().s % r1 == 0;
    if (full_twist_stage && r1 <= spec.q) {
      strands = spec.q;
      turns = spec.p;
    } else {
      fail(Errc::UnsupportedRealization,
           "r_1 = " + std::to_string(r1) + " exceeds p = " +
               std::to_string(spec.p) +
               ": no braid-closure realization on p strands");
    }
  }
  long long letter_count = turns * (strands - 1);
  for (const TLinkStage& stage : spec.stages)
    letter_count += stage.s * (stage.r - 1);
  if (strands > 4096 || letter_count > 10'000'000)
    fail(Errc::InvalidArgument, "braid realization too large to materialize");

  // With delta_bar roots throughout, the consistent realization is the
  // all-delta_bar word (reversal of the all-delta one); this is the form
  // whose closures are the Lorenz links. Mixing the families would change
  // the link.
  const bool bars =
      !spec.stages.empty() &&
      std::all_of(spec.stages.begin(), spec.stages.end(),
                  [](const TLinkStage& st) { return st.root.is_delta_bar(); });
  BraidWord word = pow(bars ? delta_bar(static_cast<int>(strands))
                            : delta(static_cast<int>(strands)),
                       static_cast<int>(turns));
  for (const TLinkStage& stage : spec.stages) {
    BraidWord beta = subset_to_word(stage.root);
    BraidWord embedded(static_cast<int>(strands), beta.letters());
    word = word * pow(embedded, static_cast<int>(stage.s));
  }
  return word;
}

BraidWord to_braid_word(const TwistedTorusParams& params) {
  return to_braid_word(as_tlink(params));
}

long long component_count(const TLinkSpec& spec) {
  return permutation_of(to_braid_word(spec)).cycle_count();
}

long long component_count(const TwistedTorusParams& params) {
  return component_count(as_tlink(params));
}

SatelliteInfo is_satellite(const TLinkSpec& spec) {
  require_valid(spec);
  if (spec.stages.empty())
    fail(Errc::InvalidArgument,
         "satellite test needs a twisted stage; a bare torus link has no r_1");
  const long long d = std::gcd(spec.p, std::llabs(spec.q));
  SatelliteInfo info;
  if (spec.stages.front().r <= d) {
    info.satellite = true;
    info.companion_p = spec.p / d;
    info.companion_q = spec.q / d;
  }
  return info;
}

SatelliteInfo is_satellite(const TwistedTorusParams& params) {
  return is_satellite(as_tlink(params));
}

bool is_lorenz(const TLinkSpec& spec) {
  if (!validate(spec).ok) return false;
  if (spec.q <= 0) return false;
  for (const TLinkStage& stage : spec.stages)
    if (stage.s <= 0 || !stage.root.is_delta_bar()) return false;
  return true;
}

namespace {

void require_duality_domain(const TwistedTorusParams& params, Errc code,
                            const char* what) {
  require_valid(params);
  std::vector<std::string> reasons;
  if (params.q <= 0) reasons.push_back("q must be positive");
  if (params.s <= 0) reasons.push_back("s must be positive");
  if (params.p <= params.r) reasons.push_back("p must exceed r");
  if (!params.root.is_standard())
    reasons.push_back("root must be delta or delta_bar");
  if (!reasons.empty()) {
    std::string message = std::string(what) + " not applicable:";
    for (const std::string& reason : reasons) message += " " + reason + ";";
    fail(code, message);
  }
}

}  // namespace

TwistedTorusParams lorenz_dual(const TwistedTorusParams& params) {
  require_duality_domain(params, Errc::DualityNotApplicable, "Lorenz duality");
  if (params.q < 2)
    fail(Errc::DualityNotApplicable,
         "dual would twist q = " + std::to_string(params.q) +
             " < 2 strands");
  TwistedTorusParams dual;
  dual.p = params.q + params.s;
  dual.q = params.r;
  dual.r = params.q;
  dual.s = params.p - params.r;
  dual.root = params.root.is_delta_bar()
                  ? RootSubset::standard_bar(static_cast<int>(dual.r))
                  : RootSubset::standard(static_cast<int>(dual.r));
  return dual;
}

long long braid_index(const TwistedTorusParams& params) {
  require_duality_domain(params, Errc::FormulaNotApplicable,
                         "braid index formula");
  const long long via_torus = std::min(params.p, params.q);
  const long long via_twist = std::min(params.s + params.q, params.r);
  if (params.r == params.q && via_torus != via_twist)
    fail(Errc::Internal, "braid index formulas disagree at r = q");
  if (params.r <= params.q) return via_torus;
  return via_twist;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t at = 0;

  void skip_space() {
    while (at < text.size() &&
           std::isspace(static_cast<unsigned char>(text[at])))
      ++at;
  }
  bool accept(char c) {
    skip_space();
    if (at < text.size() && text[at] == c) {
      ++at;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(Errc::InvalidArgument, "expected '" + std::string(1, c) +
                                      "' at position " + std::to_string(at) +
                                      " of T-link spec");
  }
  long long integer() {
    skip_space();
    std::size_t start = at;
    if (at < text.size() && (text[at] == '-' || text[at] == '+')) ++at;
    while (at < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[at])))
      ++at;
    if (start == at || (at - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail(Errc::InvalidArgument,
           "expected integer at position " + std::to_string(start));
    return std::stoll(std::string(text.substr(start, at - start)));
  }
  std::string word() {
    skip_space();
    std::size_t start = at;
    while (at < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[at])) ||
            text[at] == '_' || text[at] == '-'))
      ++at;
    return std::string(text.substr(start, at - start));
  }
};

RootSubset parse_stage_root(Cursor& cursor, long long r) {
  cursor.skip_space();
  if (cursor.at < cursor.text.size() && cursor.text[cursor.at] == '{') {
    ++cursor.at;
    std::vector<int> members;
    if (!cursor.accept('}')) {
      while (true) {
        members.push_back(static_cast<int>(cursor.integer()));
        if (cursor.accept('}')) break;
        cursor.expect(',');
      }
    }
    std::sort(members.begin(), members.end());
    return RootSubset(static_cast<int>(r), std::move(members));
  }
  const std::string name = cursor.word();
  return parse_root(name, static_cast<int>(r));
}

TLinkStage parse_stage(Cursor& cursor) {
  cursor.expect('(');
  TLinkStage stage;
  stage.r = cursor.integer();
  cursor.expect(',');
  stage.s = cursor.integer();
  if (cursor.accept(',')) {
    stage.root = parse_stage_root(cursor, stage.r);
  } else {
    stage.root = RootSubset::standard_bar(static_cast<int>(std::max(stage.r, 2ll)));
  }
  cursor.expect(')');
  return stage;
}

}  // namespace

TLinkSpec parse_tlink(std::string_view text) {
  Cursor cursor{text};
  cursor.skip_space();
  if (cursor.word() != "T")
    fail(Errc::InvalidArgument, "T-link spec must start with 'T('");
  cursor.expect('(');

  TLinkSpec spec;
  cursor.skip_space();
  if (cursor.at < cursor.text.size() && cursor.text[cursor.at] == '(') {
    // Tuple form T((p,q),(r1,s1[,root1]),...).
    cursor.expect('(');
    spec.p = cursor.integer();
    cursor.expect(',');
    spec.q = cursor.integer();
    cursor.expect(')');
    while (cursor.accept(',')) spec.stages.push_back(parse_stage(cursor));
    cursor.expect(')');
  } else {
    // Flat form T(p,q) or T(p,q,r,s[,root]), or T(p,q,(r1,s1),...).
    spec.p = cursor.integer();
    cursor.expect(',');
    spec.q = cursor.integer();
    if (cursor.accept(',')) {
      cursor.skip_space();
      if (cursor.at < cursor.text.size() && cursor.text[cursor.at] == '(') {
        spec.stages.push_back(parse_stage(cursor));
        while (cursor.accept(',')) spec.stages.push_back(parse_stage(cursor));
      } else {
        TLinkStage stage;
        stage.r = cursor.integer();
        cursor.expect(',');
        stage.s = cursor.integer();
        if (cursor.accept(','))
          stage.root = parse_stage_root(cursor, stage.r);
        else
          stage.root = RootSubset::standard_bar(
              static_cast<int>(std::max(stage.r, 2ll)));
        spec.stages.push_back(stage);
      }
    }
    cursor.expect(')');
  }
  cursor.skip_space();
  if (cursor.at != cursor.text.size())
    fail(Errc::InvalidArgument, "trailing characters after T-link spec");
  require_valid(spec);
  return spec;
}

std::string format_tlink(const TLinkSpec& spec) {
  std::ostringstream out;
  if (spec.stages.empty()) {
    out << "T(" << spec.p << "," << spec.q << ")";
    return out.str();
  }
  out << "T((" << spec.p << "," << spec.q << ")";
  for (const TLinkStage& stage : spec.stages) {
    out << ",(" << stage.r << "," << stage.s;
    if (stage.root.is_delta_bar()) {
      // default root, omitted
    } else if (stage.root.is_delta()) {
      out << ",delta";
    } else {
      out << ",{";
      for (std::size_t i = 0; i < stage.root.members.size(); ++i) {
        if (i) out << ',';
        out << stage.root.members[i];
      }
      out << "}";
    }
    out << ")";
  }
  out << ")";
  return out.str();
}

}  // namespace ttlink
