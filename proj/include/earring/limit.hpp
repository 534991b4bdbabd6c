#pragma once

#include <functional>
#include <optional>
#include <string>

#include "earring/words.hpp"

namespace earring {

/// Working depth used by every depth-bounded question unless overridden.
inline constexpr int default_depth = 32;

/// A coherent sequence of reduced words: coordinate n lies in G_n (max
/// type <= n) and psi(n, coordinate(n+1)) = coordinate(n).
///
/// Elements are either finitely described -- backed by one reduced word w,
/// with coordinate(n) = reduce(kappa(n, w)) -- or stream-backed by a pure,
/// deterministic coordinate generator. Finitely described elements carry a
/// certified bound: coordinates are literally constant from the bound on.
/// Elements are immutable and safe to share across threads.
class LimitElement {
public:
  const GroupFamily &family() const { return family_; }
  const std::string &description() const { return description_; }

  /// The n-th coordinate, n >= 1. A stream generator that emits a word
  /// with max type > n is rejected here.
  ReducedWord coordinate(int n) const;

  /// The reduced word behind a finitely described element; null for
  /// stream-backed elements.
  const ReducedWord *finite_word() const;

  /// For finitely described elements, max(1, max type): coordinates are
  /// constant from here on. Empty for stream-backed elements.
  std::optional<int> finite_bound() const;

private:
  enum class Kind { finite, stream, derived };

  LimitElement(Kind kind, GroupFamily family, std::string description)
      : kind_(kind), family_(std::move(family)),
        description_(std::move(description)) {}

  friend LimitElement iota(const GroupFamily &, const Word &);
  friend LimitElement stream_element(const GroupFamily &, std::string,
                                     std::function<ReducedWord(int)>);
  friend LimitElement lim_multiply(const LimitElement &, const LimitElement &);
  friend LimitElement lim_invert(const LimitElement &);

  Kind kind_;
  GroupFamily family_;
  std::string description_;
  ReducedWord word_;                     // finite only
  std::function<ReducedWord(int)> gen_;  // stream and derived
};

/// Embeds a finite word: coordinate(n) = reduce(kappa(n, w)). The image
/// always lies in the stable subgroup.
LimitElement iota(const GroupFamily &family, const Word &w);

/// iota of the empty word.
LimitElement identity_element(const GroupFamily &family);

/// A stream-backed element. The generator must be pure and deterministic,
/// emit words of max type <= n at coordinate n, and satisfy the coherence
/// condition; coherence is checked by tests, not per call.
LimitElement stream_element(const GroupFamily &family, std::string description,
                            std::function<ReducedWord(int)> coordinates);

/// The non-surjectivity witness: coordinate(n) is the product of the
/// commutators of h_1 with h_j for j = 2..n. Coherent, but its kappa_1
/// image lengths grow as 2(n-1), so it stabilizes at no depth.
LimitElement telescope_element(const GroupFamily &family);

/// Coordinatewise product / inverse. The product of two finitely
/// described elements is finitely described by the reduced concatenation.
LimitElement lim_multiply(const LimitElement &u, const LimitElement &v);
LimitElement lim_invert(const LimitElement &u);

/// Result of scanning kappa_m(coordinate(1..depth)) as literal sequences.
/// stable_from holds the minimal N < depth with the tail N..depth
/// constant; disengaged means not stable by this depth.
struct StabilizationReport {
  int m = 1;
  int depth = 0;
  std::optional<int> stable_from;
  Word final_image; // kappa_m(coordinate(depth))

  bool stable() const { return stable_from.has_value(); }
};

StabilizationReport stabilization_check(const LimitElement &e, int m,
                                        int depth = default_depth);

/// The stratification value: minimal N with kappa_1(coordinate(N)),
/// kappa_1(coordinate(N+1)), ... literally constant. Exact for finitely
/// described elements, depth-bounded otherwise.
struct SigmaValue {
  int n = 1;
  bool exact = true;
  int depth = 0; // inspected depth when not exact
};

/// Throws DomainError for a stream element whose kappa_1 images are not
/// stable by the given depth (the element may lie outside the stable
/// subgroup, where sigma is undefined).
SigmaValue sigma(const LimitElement &e, int depth = default_depth);

/// The finite-coordinate determination of sigma: true iff the kappa_1
/// images agree at every step from N through depth and (N = 1 or the
/// images at N-1 and N differ). Requires depth >= N + 1.
bool sigma_certificate(const LimitElement &e, int n, int depth = default_depth);

} // namespace earring
