#include "earring/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace earring {

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) +
                         ")"),
      position_(position) {}

GroupFamily::GroupFamily(std::string name, Value modulus)
    : name_(std::move(name)), modulus_(modulus) {}

GroupFamily GroupFamily::integers() { return GroupFamily("z", 0); }

GroupFamily GroupFamily::integers_mod(Value modulus) {
  if (modulus < 2)
    throw DomainError("integers_mod: modulus must be >= 2");
  return GroupFamily("zmod:" + std::to_string(modulus), modulus);
}

Value GroupFamily::identity(int) const { return 0; }

Value GroupFamily::multiply(int type, Value a, Value b) const {
  return canonical(type, a + b);
}

Value GroupFamily::invert(int type, Value a) const {
  return canonical(type, -a);
}

bool GroupFamily::equal(int type, Value a, Value b) const {
  return canonical(type, a) == canonical(type, b);
}

Value GroupFamily::distinguished(int type) const {
  return canonical(type, 1);
}

Value GroupFamily::canonical(int, Value raw) const {
  if (modulus_ == 0)
    return raw;
  Value r = raw % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::string GroupFamily::render(int, Value value) const {
  return std::to_string(value);
}

Word k_step(const GroupFamily &family, const Word &w) {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    const int type = w[i].type;
    Value product = family.identity(type);
    std::size_t j = i;
    while (j < w.size() && w[j].type == type) {
      product = family.multiply(type, product, w[j].value);
      ++j;
    }
    if (!family.equal(type, product, family.identity(type)))
      out.push_back({type, product});
    i = j;
  }
  return out;
}

ReducedWord reduce(const GroupFamily &family, const Word &w) {
  std::vector<Letter> out;
  for (const Letter &a : w) {
    if (family.equal(a.type, a.value, family.identity(a.type)))
      continue;
    if (!out.empty() && out.back().type == a.type) {
      Value merged = family.multiply(a.type, out.back().value, a.value);
      if (family.equal(a.type, merged, family.identity(a.type)))
        out.pop_back();
      else
        out.back().value = merged;
    } else {
      out.push_back({a.type, family.canonical(a.type, a.value)});
    }
  }
  return ReducedWord(std::move(out));
}

ReducedWord multiply(const GroupFamily &family, const ReducedWord &u,
                     const ReducedWord &v) {
  Word joined = u.letters();
  joined.insert(joined.end(), v.letters().begin(), v.letters().end());
  return reduce(family, joined);
}

ReducedWord invert(const GroupFamily &family, const ReducedWord &w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back({it->type, family.invert(it->type, it->value)});
  // already reduced: reversal preserves type alternation, inverses of
  // non-identity letters are non-identity
  return reduce(family, out);
}

Word kappa(int m, const Word &w) {
  if (m < 1)
    throw DomainError("kappa: level must be >= 1");
  Word out;
  for (const Letter &a : w)
    if (a.type <= m)
      out.push_back(a);
  return out;
}

Word kappa(int m, const ReducedWord &w) { return kappa(m, w.letters()); }

ReducedWord psi(const GroupFamily &family, int n, const ReducedWord &w) {
  if (n < 1)
    throw DomainError("psi: level must be >= 1");
  for (const Letter &a : w.letters())
    if (a.type > n + 1)
      throw DomainError("psi: word has a letter of type " +
                        std::to_string(a.type) + ", outside G_" +
                        std::to_string(n + 1));
  return reduce(family, kappa(n, w.letters()));
}

bool is_reduced(const GroupFamily &family, const Word &w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (family.equal(w[i].type, w[i].value, family.identity(w[i].type)))
      return false;
    if (i + 1 < w.size() && w[i].type == w[i + 1].type)
      return false;
  }
  return true;
}

int max_type(const Word &w) {
  int m = 0;
  for (const Letter &a : w)
    m = std::max(m, a.type);
  return m;
}

int max_type(const ReducedWord &w) { return max_type(w.letters()); }

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::size_t skip_spaces(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos]))
    ++pos;
  return pos;
}

// Parses a decimal integer starting at pos; sign allowed when signed_ok.
Value parse_int(std::string_view text, std::size_t &pos, bool signed_ok,
                const char *what) {
  std::size_t start = pos;
  bool negative = false;
  if (signed_ok && pos < text.size() &&
      (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
    ++pos;
  if (pos == digits)
    throw ParseError(std::string("malformed ") + what, start);
  Value out = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + digits, text.data() + pos, out);
  if (ec != std::errc() || ptr != text.data() + pos)
    throw ParseError(std::string("malformed ") + what, start);
  return negative ? -out : out;
}

} // namespace

Word parse_word(const GroupFamily &family, std::string_view text) {
  std::size_t pos = skip_spaces(text, 0);
  // "e" standing alone denotes the empty word (the form format_word emits).
  if (pos < text.size() && text[pos] == 'e' &&
      skip_spaces(text, pos + 1) == text.size())
    return {};

  Word out;
  while (pos < text.size()) {
    if (text[pos] != 'a')
      throw ParseError("expected letter atom 'a<type>'", pos);
    ++pos;
    std::size_t type_pos = pos;
    Value type = parse_int(text, pos, false, "type index");
    if (type < 1)
      throw ParseError("type index must be >= 1", type_pos);
    if (type > 1000000)
      throw ParseError("type index too large", type_pos);
    Value value = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      value = parse_int(text, pos, true, "exponent");
    }
    if (pos < text.size() && !is_space(text[pos]))
      throw ParseError("unexpected character in atom", pos);
    out.push_back({static_cast<int>(type),
                   family.canonical(static_cast<int>(type), value)});
    pos = skip_spaces(text, pos);
  }
  return out;
}

std::string format_word(const GroupFamily &family, const Word &w) {
  if (w.empty())
    return "e";
  std::string out;
  for (const Letter &a : w) {
    if (!out.empty())
      out += ' ';
    out += 'a';
    out += std::to_string(a.type);
    if (a.value != 1) {
      out += '^';
      out += family.render(a.type, a.value);
    }
  }
  return out;
}

std::string format_word(const GroupFamily &family, const ReducedWord &w) {
  return format_word(family, w.letters());
}

std::vector<ReducedWord> enumerate_reduced_words(const GroupFamily &family,
                                                 int max_len, int types,
                                                 Value value_bound) {
  std::set<Letter> letter_set;
  for (int t = 1; t <= types; ++t)
    for (Value v = -value_bound; v <= value_bound; ++v) {
      Value c = family.canonical(t, v);
      if (!family.equal(t, c, family.identity(t)))
        letter_set.insert({t, c});
    }
  std::vector<Letter> alphabet(letter_set.begin(), letter_set.end());

  std::vector<ReducedWord> out;
  out.push_back(ReducedWord{});
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word &w : frontier)
      for (const Letter &a : alphabet) {
        if (!w.empty() && w.back().type == a.type)
          continue;
        Word extended = w;
        extended.push_back(a);
        out.push_back(reduce(family, extended));
        next.push_back(std::move(extended));
      }
    frontier = std::move(next);
  }
  return out;
}

} // namespace earring
