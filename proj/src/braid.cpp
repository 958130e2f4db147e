#include "ttlink/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ttlink {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    fail(Errc::InvalidArgument, "braid word needs at least one strand");
  for (int letter : letters_) {
    int index = std::abs(letter);
    if (index < 1 || index > strands_ - 1)
      fail(Errc::InvalidArgument,
           "letter " + std::to_string(letter) + " out of range for B_" +
               std::to_string(strands_));
  }
}

bool BraidWord::positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](int letter) { return letter > 0; });
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    fail(Errc::InvalidArgument, "cannot concatenate words with " +
                                    std::to_string(a.strands()) + " and " +
                                    std::to_string(b.strands()) + " strands");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord pow(const BraidWord& w, int exponent) {
  if (exponent < 0)
    fail(Errc::InvalidArgument, "negative powers of braid words unsupported");
  std::vector<int> letters;
  letters.reserve(w.size() * static_cast<std::size_t>(exponent));
  for (int i = 0; i < exponent; ++i)
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord reversed(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord delta(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "delta needs n >= 1");
  std::vector<int> letters(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  std::iota(letters.begin(), letters.end(), 1);
  return BraidWord(n, std::move(letters));
}

BraidWord delta_bar(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "delta_bar needs n >= 1");
  std::vector<int> letters;
  for (int i = n - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord half_twist(int n) {
  if (n < 2) fail(Errc::InvalidArgument, "half twist needs n >= 2");
  std::vector<int> letters;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j >= 1; --j) letters.push_back(j);
  return BraidWord(n, std::move(letters));
}

BraidWord full_twist(int n) {
  if (n < 2) fail(Errc::InvalidArgument, "full twist needs n >= 2");
  return pow(delta(n), n);
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) fail(Errc::InvalidArgument, "permutation needs n >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      fail(Errc::InvalidArgument, "images do not form a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i > n - 1)
    fail(Errc::InvalidArgument, "transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

bool Permutation::is_reversal() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != size() + 1 - i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& g) const {
  if (size() != g.size())
    fail(Errc::InvalidArgument, "composing permutations of different sizes");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[i - 1] = g.image(image(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[image(i) - 1] = i;
  return Permutation(std::move(images));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int j = i; !seen[j - 1]; j = image(j)) seen[j - 1] = true;
  }
  return cycles;
}

Permutation permutation_of(const BraidWord& w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  // images[i] = current position of the strand that started at i+1; each
  // crossing swaps the strands sitting at positions |letter|, |letter|+1.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);  // at[pos-1] = strand at that position
  for (int letter : w.letters()) {
    int pos = std::abs(letter);
    int a = at[pos - 1], b = at[pos];
    std::swap(at[pos - 1], at[pos]);
    images[a - 1] = pos + 1;
    images[b - 1] = pos;
  }
  return Permutation(std::move(images));
}

namespace {

// Starting set of a permutation braid: i such that sigma_i is a left
// divisor, i.e. the strands starting at i and i+1 cross.
bool in_starting_set(const Permutation& p, int i) {
  return p.image(i) > p.image(i + 1);
}

// Finishing set: i such that sigma_i is a right divisor, i.e. the strands
// ending at positions i and i+1 cross.
bool in_finishing_set(const Permutation& p_inv, int i) {
  return p_inv.image(i) > p_inv.image(i + 1);
}

// Left-weight an adjacent pair (a, b): move every generator that left
// divides b but does not right divide a across, until S(b) is contained in
// F(a). Returns true if anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  const int n = a.size();
  bool moved = false;
  Permutation a_inv = a.inverse();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= n - 1; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a_inv, i)) {
        Permutation tau = Permutation::adjacent_transposition(n, i);
        a = a.then(tau);
        b = tau.then(b);
        a_inv = a.inverse();
        moved = true;
        progress = true;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm left_normal_form(const BraidWord& w) {
  if (!w.positive())
    fail(Errc::InvalidArgument,
         "left normal form is implemented for positive words only");
  const int n = w.strands();
  std::vector<Permutation> factors;
  factors.reserve(w.size());
  for (int letter : w.letters())
    factors.push_back(Permutation::adjacent_transposition(n, letter));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> next;
    next.reserve(factors.size());
    for (Permutation& factor : factors) {
      if (factor.is_identity()) {
        changed = true;
        continue;
      }
      if (!next.empty() && left_weight_pair(next.back(), factor)) changed = true;
      if (!factor.is_identity())
        next.push_back(std::move(factor));
      else
        changed = true;
    }
    factors = std::move(next);
  }

  NormalForm nf;
  nf.strands = n;
  std::size_t head = 0;
  while (head < factors.size() && factors[head].is_reversal()) ++head;
  nf.infimum = static_cast<int>(head);
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(head),
                    factors.end());
  return nf;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    fail(Errc::InvalidArgument, "words live in different braid groups");
  if (!a.positive() || !b.positive())
    fail(Errc::InvalidArgument, "equality test supports positive words only");
  if (a.size() != b.size()) return false;  // positive words preserve length
  return left_normal_form(a) == left_normal_form(b);
}

BraidWord permutation_braid_word(const Permutation& p) {
  const int n = p.size();
  Permutation rest = p;
  std::vector<int> letters;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i <= n - 1; ++i) {
      if (in_starting_set(rest, i)) {
        letters.push_back(i);
        rest = Permutation::adjacent_transposition(n, i).then(rest);
        found = true;
        break;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord flatten(const NormalForm& nf) {
  BraidWord word(nf.strands, {});
  for (int i = 0; i < nf.infimum; ++i) word = word * half_twist(nf.strands);
  for (const Permutation& factor : nf.factors)
    word = word * permutation_braid_word(factor);
  return word;
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    int n = 0;
    std::string head(text.substr(0, colon));
    std::istringstream hs(head);
    if (!(hs >> n)) fail(Errc::InvalidArgument, "bad strand count in '" + std::string(text) + "'");
    if (strands && *strands != n)
      fail(Errc::InvalidArgument, "strand count mismatch in braid word text");
    std::istringstream ls(std::string(text.substr(colon + 1)));
    std::vector<int> letters;
    int letter = 0;
    while (ls >> letter) letters.push_back(letter);
    if (!ls.eof()) fail(Errc::InvalidArgument, "bad letter in '" + std::string(text) + "'");
    return BraidWord(n, std::move(letters));
  }

  // Compact digit form, e.g. "4321".
  std::vector<int> letters;
  int max_index = 0;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      fail(Errc::InvalidArgument,
           "compact braid word may only contain digits 1-9: '" +
               std::string(text) + "'");
    letters.push_back(c - '0');
    max_index = std::max(max_index, c - '0');
  }
  if (letters.empty())
    fail(Errc::InvalidArgument, "empty braid word text");
  int n = strands ? *strands : max_index + 1;
  if (n > 10)
    fail(Errc::InvalidArgument, "compact braid word form requires n <= 10");
  return BraidWord(n, std::move(letters));
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream out;
  out << w.strands() << ":";
  for (int letter : w.letters()) out << ' ' << letter;
  return out.str();
}

std::string compact_braid_word(const BraidWord& w) {
  if (w.strands() > 10)
    fail(Errc::InvalidArgument, "compact form requires n <= 10");
  if (!w.positive())
    fail(Errc::InvalidArgument, "compact form requires a positive word");
  std::string out;
  for (int letter : w.letters()) out.push_back(static_cast<char>('0' + letter));
  return out;
}

}  // namespace ttlink
