#pragma once

#include <map>
#include <vector>

#include "earring/limit.hpp"

namespace earring {

enum class Side { left, right };

/// Which perturbed element leaves the base element's stratum. The
/// dichotomy checker always reports the side certified by the first-letter
/// case split, so it emits left_escapes or right_escapes; both_escape
/// stays in the vocabulary for report consumers.
enum class Branch { left_escapes, right_escapes, both_escape };

/// The level-n perturbation g_n (left: h_1 h_n h_1^-1 h_n^-1) or g^n
/// (right: h_n h_1 h_n^-1 h_1^-1) as an iota image. Every coordinate below
/// n is the empty word, so g_n -> identity coordinatewise. n >= 2.
LimitElement perturbation(const GroupFamily &family, int n, Side side);

/// One probe of the dichotomy at level n: multiplies both perturbations
/// onto the base element and compares the kappa_1 images literally.
struct WitnessReport {
  std::string base;      // description of f
  SigmaValue base_sigma; // K = sigma(f), exact
  int level = 0;         // the probed n

  std::optional<int> first_letter_type; // of coordinate(f, n); empty word: none
  Branch branch = Branch::left_escapes;

  bool left_escapes = false;  // kappa_1(f_n(n)) != kappa_1(f(n))
  bool right_escapes = false; // kappa_1(f^n(n)) != kappa_1(f(n))
  // kappa_1(f(n)) = kappa_1(f(n-1)) = kappa_1(f_n(n-1)) = kappa_1(f^n(n-1))
  bool equation_chain_holds = false;
  // the escaping image is literally (h_1, h_1^-1) prepended to kappa_1(f(n))
  bool prefix_extension_holds = false;
  // the escaping element fails sigma_certificate(., K)
  bool escape_decertified = false;
  // both perturbed elements match f on every coordinate below n
  bool agrees_below_level = false;

  Word kappa1_base;  // kappa_1(f(n))
  Word kappa1_left;  // kappa_1(f_n(n))
  Word kappa1_right; // kappa_1(f^n(n))

  /// The case-split side did escape.
  bool escaped() const {
    return branch == Branch::right_escapes ? right_escapes : left_escapes;
  }
  /// Every verified property of the probe held.
  bool ok() const {
    return escaped() && equation_chain_holds && prefix_extension_holds &&
           escape_decertified && agrees_below_level;
  }
};

/// Requires sigma(f) exact and n >= sigma(f) + 1.
WitnessReport witness_dichotomy(const LimitElement &f, int n,
                                int depth = default_depth);

/// Dichotomy probes for every level sigma(f)+1 .. n_max. Requires
/// n_max > sigma(f).
std::vector<WitnessReport> empty_interior_scan(const LimitElement &f,
                                               int n_max,
                                               int depth = default_depth);

struct AuditRow {
  std::string description;
  bool eligible = false;
  std::string note; // why the element was ineligible
  int stratum = 0;  // sigma N, eligible rows only
  bool certificate_ok = false;
  int probe_from = 0;
  int probe_to = 0;
  int left_count = 0;
  int right_count = 0;
  bool scan_ok = false;
};

struct AuditTable {
  std::vector<AuditRow> rows;
  std::map<int, int> stratum_sizes; // stratum -> eligible element count
  int eligible_count = 0;
  int ineligible_count = 0;
  bool passed = false;
};

/// Audits the decomposition of a corpus by strata: assigns each element
/// its sigma stratum, verifies the stratum is the unique certified one,
/// and runs the escape scan at levels sigma+1 .. max(n_max, sigma+1).
/// Elements whose sigma cannot be certified (stabilization failure, or a
/// stream with only a depth-bounded answer) are flagged ineligible, which
/// does not fail the audit.
AuditTable decomposition_audit(const std::vector<LimitElement> &corpus,
                               int n_max, int depth = default_depth);

/// Aligned text columns: description, stratum, certificate, scan summary.
std::string render_audit_text(const AuditTable &table);

} // namespace earring
