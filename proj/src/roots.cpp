#include "ttlink/roots.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ttlink {

RootSubset::RootSubset(int strands, std::vector<int> members)
    : strands(strands), members(std::move(members)) {
  if (strands < 2) fail(Errc::InvalidArgument, "root subset needs n >= 2");
  int previous = 0;
  for (int j : this->members) {
    if (j <= previous || j > strands - 2)
      fail(Errc::InvalidArgument,
           "subset members must increase strictly within 1..n-2");
    previous = j;
  }
}

RootSubset RootSubset::standard(int n) {
  std::vector<int> all;
  for (int j = 1; j <= n - 2; ++j) all.push_back(j);
  return RootSubset(n, std::move(all));
}

RootSubset RootSubset::standard_bar(int n) { return RootSubset(n, {}); }

bool RootSubset::is_delta() const {
  return static_cast<int>(members.size()) == strands - 2;
}

bool RootSubset::is_delta_bar() const { return members.empty(); }

unsigned long RootSubset::bitmask() const {
  unsigned long mask = 0;
  for (int j : members) mask |= 1ul << (j - 1);
  return mask;
}

ChainDecomposition chain_decomposition(const RootSubset& subset) {
  ChainDecomposition result;
  int low = 1;
  for (int j : subset.members) {
    std::vector<int> chain;
    for (int i = j; i >= low; --i) chain.push_back(i);
    result.chains.push_back(std::move(chain));
    low = j + 1;
  }
  std::vector<int> last;
  for (int i = subset.strands - 1; i >= low; --i) last.push_back(i);
  result.chains.push_back(std::move(last));
  return result;
}

BraidWord subset_to_word(const RootSubset& subset) {
  std::vector<int> letters;
  for (const auto& chain : chain_decomposition(subset).chains)
    letters.insert(letters.end(), chain.begin(), chain.end());
  return BraidWord(subset.strands, std::move(letters));
}

namespace {

bool is_index_permutation(const BraidWord& word) {
  const int n = word.strands();
  if (static_cast<int>(word.size()) != n - 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int letter : word.letters()) {
    if (letter < 1 || letter > n - 1 || seen[static_cast<std::size_t>(letter)])
      return false;
    seen[static_cast<std::size_t>(letter)] = true;
  }
  return true;
}

}  // namespace

RootSubset word_to_subset(const BraidWord& word) {
  if (!is_index_permutation(word))
    fail(Errc::NotARootCandidate,
         "letters are not a permutation of 1..n-1 for n=" +
             std::to_string(word.strands()));
  // Commute any letter smaller by at least two past its left neighbour
  // until the word is a concatenation of decreasing chains.
  std::vector<int> letters = word.letters();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 1; k < letters.size(); ++k) {
      if (letters[k] < letters[k - 1] - 1) {
        std::swap(letters[k], letters[k - 1]);
        moved = true;
      }
    }
  }
  // Chain starts, except the final chain's, are the subset members.
  std::vector<int> members;
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (k == 0 || letters[k] != letters[k - 1] - 1) members.push_back(letters[k]);
  members.pop_back();
  std::sort(members.begin(), members.end());
  return RootSubset(word.strands(), std::move(members));
}

std::vector<RootSubset> enumerate_root_subsets(int n) {
  if (n < 2) fail(Errc::InvalidArgument, "root enumeration needs n >= 2");
  std::vector<RootSubset> subsets;
  const unsigned long count = 1ul << (n - 2);
  subsets.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<int> members;
    for (int j = 1; j <= n - 2; ++j)
      if (mask & (1ul << (j - 1))) members.push_back(j);
    subsets.emplace_back(n, std::move(members));
  }
  return subsets;
}

std::vector<BraidWord> enumerate_roots(int n) {
  std::vector<BraidWord> words;
  for (const RootSubset& subset : enumerate_root_subsets(n))
    words.push_back(subset_to_word(subset));
  return words;
}

bool is_positive_root(const BraidWord& word) {
  if (!word.positive()) return false;
  const int n = word.strands();
  if (n < 2 || !is_index_permutation(word)) return false;
  return words_equal(pow(word, n), full_twist(n));
}

namespace {

// Position of each generator's single occurrence in a permutation word.
std::vector<int> occurrence_positions(const BraidWord& word) {
  std::vector<int> pos(word.size() + 1, 0);
  for (std::size_t k = 0; k < word.size(); ++k)
    pos[static_cast<std::size_t>(word.letters()[k])] = static_cast<int>(k);
  return pos;
}

// Bigons at the start of beta^s sit between strands j and j+1 exactly when
// sigma_j crosses before every neighbouring generator has acted; a
// peripheral quadrilateral needs both neighbours to act first.
void start_profile(const BraidWord& word, int& bigons, int& quads) {
  const int n = word.strands();
  const std::vector<int> pos = occurrence_positions(word);
  bigons = 0;
  quads = 0;
  for (int j = 2; j <= n - 2; ++j) {
    if (pos[j] < pos[j - 1] && pos[j] < pos[j + 1]) ++bigons;
    if (pos[j] > pos[j - 1] && pos[j] > pos[j + 1]) ++quads;
  }
  if (pos[n - 1] < pos[n - 2]) ++bigons;  // top strand pair
  if (pos[1] < pos[2]) ++bigons;          // first strand pair
}

}  // namespace

PeripheralProfile peripheral_profile(const RootSubset& subset) {
  if (subset.strands < 3)
    fail(Errc::InvalidArgument, "peripheral profile needs n >= 3");
  const BraidWord word = subset_to_word(subset);
  PeripheralProfile profile;
  start_profile(word, profile.bigons_top, profile.quads_top);
  // Turning the diagram upside down reverses the word.
  start_profile(reversed(word), profile.bigons_bottom, profile.quads_bottom);
  return profile;
}

RootSubset parse_root(std::string_view text, int strands_hint) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  if (s == "delta" || s == "standard") {
    if (strands_hint < 2)
      fail(Errc::InvalidArgument, "root family name needs a strand count");
    return RootSubset::standard(strands_hint);
  }
  if (s == "deltabar" || s == "delta-bar" || s == "dbar") {
    if (strands_hint < 2)
      fail(Errc::InvalidArgument, "root family name needs a strand count");
    return RootSubset::standard_bar(strands_hint);
  }

  if (s.rfind("n=", 0) == 0) {
    // Subset form "n=5;J={1,3}".
    auto semi = s.find(';');
    if (semi == std::string::npos || s.compare(semi, 4, ";J={") != 0 ||
        s.back() != '}')
      fail(Errc::InvalidArgument, "bad subset form: '" + std::string(text) + "'");
    int n = 0;
    try {
      n = std::stoi(s.substr(2, semi - 2));
    } catch (const std::exception&) {
      fail(Errc::InvalidArgument, "bad strand count in subset form");
    }
    std::vector<int> members;
    std::string body = s.substr(semi + 4, s.size() - semi - 5);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        members.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail(Errc::InvalidArgument, "bad subset member '" + item + "'");
      }
    }
    std::sort(members.begin(), members.end());
    if (strands_hint >= 2 && strands_hint != n)
      fail(Errc::InvalidArgument, "subset strand count disagrees with context");
    return RootSubset(n, std::move(members));
  }

  // Compact word form.
  BraidWord word = parse_braid_word(
      s, strands_hint >= 2 ? std::optional<int>(strands_hint) : std::nullopt);
  return word_to_subset(word);
}

std::string format_subset(const RootSubset& subset) {
  std::ostringstream out;
  out << "n=" << subset.strands << ";J={";
  for (std::size_t i = 0; i < subset.members.size(); ++i) {
    if (i) out << ',';
    out << subset.members[i];
  }
  out << '}';
  return out.str();
}

}  // namespace ttlink
