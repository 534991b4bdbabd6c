#include "earring/limit.hpp"

#include <algorithm>
#include <utility>

namespace earring {

namespace {

void require_same_family(const LimitElement &u, const LimitElement &v) {
  if (!(u.family() == v.family()))
    throw DomainError("elements belong to different families: " +
                      u.family().name() + " vs " + v.family().name());
}

} // namespace

ReducedWord LimitElement::coordinate(int n) const {
  if (n < 1)
    throw DomainError("coordinate index must be >= 1");
  switch (kind_) {
  case Kind::finite:
    return reduce(family_, kappa(n, word_.letters()));
  case Kind::stream: {
    ReducedWord w = gen_(n);
    if (max_type(w) > n)
      throw DomainError("stream coordinate " + std::to_string(n) +
                        " has max type " + std::to_string(max_type(w)) +
                        ", outside G_" + std::to_string(n));
    return w;
  }
  case Kind::derived:
    return gen_(n);
  }
  return {};
}

const ReducedWord *LimitElement::finite_word() const {
  return kind_ == Kind::finite ? &word_ : nullptr;
}

std::optional<int> LimitElement::finite_bound() const {
  if (kind_ != Kind::finite)
    return std::nullopt;
  return std::max(1, max_type(word_));
}

LimitElement iota(const GroupFamily &family, const Word &w) {
  ReducedWord r = reduce(family, w);
  std::string description = "iota(" + format_word(family, r) + ")";
  LimitElement e(LimitElement::Kind::finite, family, std::move(description));
  e.word_ = std::move(r);
  return e;
}

LimitElement identity_element(const GroupFamily &family) {
  return iota(family, Word{});
}

LimitElement stream_element(const GroupFamily &family, std::string description,
                            std::function<ReducedWord(int)> coordinates) {
  LimitElement e(LimitElement::Kind::stream, family, std::move(description));
  e.gen_ = std::move(coordinates);
  return e;
}

LimitElement telescope_element(const GroupFamily &family) {
  return stream_element(family, "telescope", [family](int n) {
    Word w;
    const Value h1 = family.distinguished(1);
    for (int j = 2; j <= n; ++j) {
      const Value hj = family.distinguished(j);
      w.push_back({1, h1});
      w.push_back({j, hj});
      w.push_back({1, family.invert(1, h1)});
      w.push_back({j, family.invert(j, hj)});
    }
    return reduce(family, w); // alternating types, nothing cancels
  });
}

LimitElement lim_multiply(const LimitElement &u, const LimitElement &v) {
  require_same_family(u, v);
  const GroupFamily &family = u.family();
  if (u.finite_word() && v.finite_word()) {
    Word joined = u.finite_word()->letters();
    const auto &tail = v.finite_word()->letters();
    joined.insert(joined.end(), tail.begin(), tail.end());
    return iota(family, joined);
  }
  LimitElement e(LimitElement::Kind::derived, family,
                 "product(" + u.description() + ", " + v.description() + ")");
  e.gen_ = [family, u, v](int n) {
    return multiply(family, u.coordinate(n), v.coordinate(n));
  };
  return e;
}

LimitElement lim_invert(const LimitElement &u) {
  const GroupFamily &family = u.family();
  if (u.finite_word()) {
    ReducedWord r = invert(family, *u.finite_word());
    return iota(family, r.letters());
  }
  LimitElement e(LimitElement::Kind::derived, family,
                 "inverse(" + u.description() + ")");
  e.gen_ = [family, u](int n) { return invert(family, u.coordinate(n)); };
  return e;
}

namespace {

// kappa_m images of coordinates 1..depth, as literal words. images[i]
// holds coordinate i (1-indexed, slot 0 unused).
std::vector<Word> kappa_images(const LimitElement &e, int m, int depth) {
  std::vector<Word> images(static_cast<std::size_t>(depth) + 1);
  for (int i = 1; i <= depth; ++i)
    images[static_cast<std::size_t>(i)] = kappa(m, e.coordinate(i));
  return images;
}

// Minimal start of the constant tail ending at `last`; == last when the
// images at last-1 and last already differ.
int constant_tail_start(const std::vector<Word> &images, int first, int last) {
  int start = last;
  for (int i = last - 1; i >= first; --i) {
    if (images[static_cast<std::size_t>(i)] !=
        images[static_cast<std::size_t>(last)])
      break;
    start = i;
  }
  return start;
}

} // namespace

StabilizationReport stabilization_check(const LimitElement &e, int m,
                                        int depth) {
  if (m < 1)
    throw DomainError("stabilization_check: m must be >= 1");
  if (depth < 2)
    throw DomainError("stabilization_check: depth must be >= 2");
  std::vector<Word> images = kappa_images(e, m, depth);
  StabilizationReport report;
  report.m = m;
  report.depth = depth;
  report.final_image = images[static_cast<std::size_t>(depth)];
  int start = constant_tail_start(images, 1, depth);
  if (start < depth)
    report.stable_from = start;
  return report;
}

SigmaValue sigma(const LimitElement &e, int depth) {
  if (auto bound = e.finite_bound()) {
    // Coordinates are literally constant beyond the bound, so the scan up
    // to the bound is the whole answer.
    std::vector<Word> images = kappa_images(e, 1, *bound);
    return SigmaValue{constant_tail_start(images, 1, *bound), true, 0};
  }
  StabilizationReport stab = stabilization_check(e, 1, depth);
  if (!stab.stable())
    throw DomainError("sigma undefined at depth " + std::to_string(depth) +
                      ": kappa_1 images of \"" + e.description() +
                      "\" do not stabilize (the element may lie outside the "
                      "stable subgroup)");
  return SigmaValue{*stab.stable_from, false, depth};
}

bool sigma_certificate(const LimitElement &e, int n, int depth) {
  if (n < 1)
    throw DomainError("sigma_certificate: N must be >= 1");
  if (depth < n + 1)
    throw DomainError("sigma_certificate: depth must be >= N + 1");
  const int first = std::max(1, n - 1);
  std::vector<Word> images(static_cast<std::size_t>(depth) + 1);
  for (int i = first; i <= depth; ++i)
    images[static_cast<std::size_t>(i)] = kappa(1, e.coordinate(i));
  for (int i = n; i < depth; ++i)
    if (images[static_cast<std::size_t>(i)] !=
        images[static_cast<std::size_t>(i) + 1])
      return false;
  if (n > 1 && images[static_cast<std::size_t>(n) - 1] ==
                   images[static_cast<std::size_t>(n)])
    return false;
  return true;
}

} // namespace earring
