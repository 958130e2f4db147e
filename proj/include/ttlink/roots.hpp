#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ttlink/braid.hpp"

namespace ttlink {

// Canonical name for a positive n-th root of the full twist: the subset of
// {1,...,n-2} delimiting its decreasing-chain normal form. The empty subset
// is delta_bar_n, the full subset is delta_n.
struct RootSubset {
  int strands = 2;
  std::vector<int> members;  // strictly increasing

  RootSubset() = default;
  RootSubset(int strands, std::vector<int> members);

  static RootSubset standard(int n);      // delta_n
  static RootSubset standard_bar(int n);  // delta_bar_n

  bool is_delta() const;
  bool is_delta_bar() const;
  bool is_standard() const { return is_delta() || is_delta_bar(); }
  unsigned long bitmask() const;

  friend bool operator==(const RootSubset&, const RootSubset&) = default;
};

struct ChainDecomposition {
  std::vector<std::vector<int>> chains;  // decreasing runs covering 1..n-1
};

// Face counts contributed at the two ends of the braid region of beta^s.
struct PeripheralProfile {
  int bigons_top = 0;
  int bigons_bottom = 0;
  int quads_top = 0;
  int quads_bottom = 0;

  friend bool operator==(const PeripheralProfile&,
                         const PeripheralProfile&) = default;
};

ChainDecomposition chain_decomposition(const RootSubset& subset);
BraidWord subset_to_word(const RootSubset& subset);
RootSubset word_to_subset(const BraidWord& word);

std::vector<RootSubset> enumerate_root_subsets(int n);  // bitmask order
std::vector<BraidWord> enumerate_roots(int n);

// Full verification: length n-1, letters a permutation of 1..n-1, and
// w^n equal to the full twist under the normal-form oracle.
bool is_positive_root(const BraidWord& word);

PeripheralProfile peripheral_profile(const RootSubset& subset);

// Accepts the compact word form ("1432"), the subset form ("n=5;J={1}"),
// and, when a strand count is supplied, the family names "delta" and
// "deltabar".
RootSubset parse_root(std::string_view text, int strands_hint = 0);
std::string format_subset(const RootSubset& subset);  // "n=5;J={1}"

}  // namespace ttlink
