#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace earring {

/// Encoded element of a letter group. Both built-in families encode their
/// elements as integers: (Z, +) directly, Z/m by its canonical
/// representative in [0, m).
using Value = std::int64_t;

/// A word expression that does not match the grammar.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Domain misuse: a bonding map applied outside its level, mixed families,
/// a stream breaking a coordinate invariant, sigma of a non-stabilizing
/// element, and similar.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The indexed family of letter groups H_1, H_2, ...  Each group supplies
/// an identity, multiplication, inversion, an equality test, and a fixed
/// non-identity element h_i used by the perturbation constructions.
///
/// Two families are built in: every H_i the integers under addition
/// ("z"), and every H_i the integers mod m ("zmod:m", m >= 2). Values are
/// immutable and cheap to copy.
class GroupFamily {
public:
  /// Every H_i is (Z, +) with h_i = 1.
  static GroupFamily integers();
  /// Every H_i is Z/m with h_i = 1. Requires m >= 2.
  static GroupFamily integers_mod(Value modulus);

  const std::string &name() const { return name_; }

  Value identity(int type) const;
  Value multiply(int type, Value a, Value b) const;
  Value invert(int type, Value a) const;
  bool equal(int type, Value a, Value b) const;
  /// The distinguished h_i, never equal to the identity.
  Value distinguished(int type) const;
  /// Canonical representative of a raw encoded value (reduces mod m for
  /// the modular family; the identity map for the integers).
  Value canonical(int type, Value raw) const;
  std::string render(int type, Value value) const;

  friend bool operator==(const GroupFamily &, const GroupFamily &) = default;

private:
  GroupFamily(std::string name, Value modulus);

  std::string name_;
  Value modulus_; // 0 means the integer family
};

/// One letter: an element of H_type. type >= 1.
struct Letter {
  int type = 1;
  Value value = 0;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// A finite, possibly unreduced letter sequence. May contain identity
/// letters and adjacent letters of the same type.
using Word = std::vector<Letter>;

class ReducedWord;

/// One reduction pass: partition w into maximal runs of consecutive
/// same-type letters, delete each run whose product is that group's
/// identity, and fold every remaining run to the single product letter.
/// Never longer than its input, and the same length only at a fixed point.
Word k_step(const GroupFamily &family, const Word &w);

/// Free-product normal form by single-pass stack cancellation; agrees with
/// iterating k_step to its fixed point. Idempotent.
ReducedWord reduce(const GroupFamily &family, const Word &w);

/// The normal form in the free product: no identity letters, no two
/// consecutive letters of the same type. Constructed through reduce().
class ReducedWord {
public:
  ReducedWord() = default; // the empty word, the group identity

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend auto operator<=>(const ReducedWord &, const ReducedWord &) = default;

private:
  friend ReducedWord reduce(const GroupFamily &, const Word &);
  explicit ReducedWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// Concatenate-then-reduce. The empty word is the identity.
ReducedWord multiply(const GroupFamily &family, const ReducedWord &u,
                     const ReducedWord &v);

/// Reverse of w with every letter inverted in its own group.
ReducedWord invert(const GroupFamily &family, const ReducedWord &w);

/// Deletion map: the subword of letters with type <= m, in order.
/// Deletion only; the image is not reduced in general. m >= 1.
Word kappa(int m, const Word &w);
Word kappa(int m, const ReducedWord &w);

/// Bonding epimorphism G_{n+1} -> G_n: delete the letters of type n+1,
/// then reduce. Rejects words carrying a letter of type > n+1.
ReducedWord psi(const GroupFamily &family, int n, const ReducedWord &w);

bool is_reduced(const GroupFamily &family, const Word &w);

/// Largest type index present; 0 for the empty word.
int max_type(const Word &w);
int max_type(const ReducedWord &w);

/// Word-expression grammar:
///   word := WS* (atom (WS+ atom)*)? WS*
///   atom := "a" INT ("^" SINT)?     (INT >= 1; omitted exponent means 1)
/// The empty string and the single token "e" denote the empty word. For
/// the modular family, values are taken mod m.
Word parse_word(const GroupFamily &family, std::string_view text);

/// Emits the same grammar; the empty word formats as "e".
std::string format_word(const GroupFamily &family, const Word &w);
std::string format_word(const GroupFamily &family, const ReducedWord &w);

/// All reduced words of length <= max_len over types 1..types with letter
/// values drawn from the nonzero canonical values of -value_bound ..
/// value_bound. Deterministic order: by length, then lexicographically.
std::vector<ReducedWord> enumerate_reduced_words(const GroupFamily &family,
                                                 int max_len, int types,
                                                 Value value_bound);

} // namespace earring
