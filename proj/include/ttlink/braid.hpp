#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttlink/error.hpp"

namespace ttlink {

// A word in the generators of B_n. Letters are signed integers: +i stands
// for sigma_i, -i for its inverse, 1 <= |i| <= n-1.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool positive() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Concatenation; both words must live in the same B_n.
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord pow(const BraidWord& w, int exponent);
BraidWord reversed(const BraidWord& w);

BraidWord delta(int n);      // sigma_1 sigma_2 ... sigma_{n-1}
BraidWord delta_bar(int n);  // sigma_{n-1} ... sigma_2 sigma_1
BraidWord half_twist(int n);
BraidWord full_twist(int n);  // (delta_n)^n, length n(n-1)

// Bijection of {1,...,n}; image(i) is where the strand starting at
// position i ends up.
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);
  static Permutation adjacent_transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_reversal() const;  // i -> n+1-i, the half-twist permutation

  // Composition left to right: (this.then(g))(x) = g(this(x)).
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

// Underlying permutation of a braid word, letters applied left to right.
// Signs are ignored: sigma_i and its inverse induce the same transposition.
Permutation permutation_of(const BraidWord& w);

// Left-weighted factorization Delta^infimum x_1 ... x_k of a positive word.
// Two positive words are equal in B_n iff their normal forms coincide.
struct NormalForm {
  int strands = 0;
  int infimum = 0;  // leading half-twist factors
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm left_normal_form(const BraidWord& w);
bool words_equal(const BraidWord& a, const BraidWord& b);

// A positive word realizing a permutation braid (greedy, lowest descent
// first). Length equals the inversion count of the permutation.
BraidWord permutation_braid_word(const Permutation& p);
BraidWord flatten(const NormalForm& nf);

// Text format "n: i1 i2 ... ik". The compact digit form "4321" is accepted
// on input for n <= 10, with n inferred as max index + 1 unless given.
BraidWord parse_braid_word(std::string_view text,
                           std::optional<int> strands = std::nullopt);
std::string format_braid_word(const BraidWord& w);
std::string compact_braid_word(const BraidWord& w);

}  // namespace ttlink
