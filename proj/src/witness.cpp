#include "earring/witness.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace earring {

LimitElement perturbation(const GroupFamily &family, int n, Side side) {
  if (n < 2)
    throw DomainError("perturbation: level must be >= 2");
  const Letter h1{1, family.distinguished(1)};
  const Letter hn{n, family.distinguished(n)};
  const Letter h1i{1, family.invert(1, h1.value)};
  const Letter hni{n, family.invert(n, hn.value)};
  const Word w = side == Side::left ? Word{h1, hn, h1i, hni}
                                    : Word{hn, h1, hni, h1i};
  return iota(family, w);
}

WitnessReport witness_dichotomy(const LimitElement &f, int n, int depth) {
  WitnessReport report;
  report.base = f.description();
  report.base_sigma = sigma(f, depth);
  if (!report.base_sigma.exact)
    throw DomainError("witness_dichotomy: base element needs an exact sigma");
  const int k = report.base_sigma.n;
  if (n < k + 1)
    throw DomainError("witness_dichotomy: probe level " + std::to_string(n) +
                      " must be >= sigma + 1 = " + std::to_string(k + 1));
  report.level = n;

  const GroupFamily &family = f.family();
  const LimitElement left = lim_multiply(perturbation(family, n, Side::left), f);
  const LimitElement right =
      lim_multiply(perturbation(family, n, Side::right), f);

  const ReducedWord base_n = f.coordinate(n);
  report.kappa1_base = kappa(1, base_n);
  report.kappa1_left = kappa(1, left.coordinate(n));
  report.kappa1_right = kappa(1, right.coordinate(n));

  const Word base_prev = kappa(1, f.coordinate(n - 1));
  report.equation_chain_holds =
      report.kappa1_base == base_prev &&
      base_prev == kappa(1, left.coordinate(n - 1)) &&
      base_prev == kappa(1, right.coordinate(n - 1));

  report.left_escapes = report.kappa1_left != report.kappa1_base;
  report.right_escapes = report.kappa1_right != report.kappa1_base;

  if (!base_n.empty())
    report.first_letter_type = base_n.letters().front().type;
  report.branch = report.first_letter_type == n ? Branch::right_escapes
                                                : Branch::left_escapes;

  Word expected{{1, family.distinguished(1)},
                {1, family.invert(1, family.distinguished(1))}};
  expected.insert(expected.end(), report.kappa1_base.begin(),
                  report.kappa1_base.end());
  const Word &escaping_image = report.branch == Branch::right_escapes
                                   ? report.kappa1_right
                                   : report.kappa1_left;
  report.prefix_extension_holds = escaping_image == expected;

  const LimitElement &escaping =
      report.branch == Branch::right_escapes ? right : left;
  report.escape_decertified =
      !sigma_certificate(escaping, k, std::max(depth, n + 1));

  report.agrees_below_level = true;
  for (int i = 1; i < n; ++i) {
    const ReducedWord base_i = f.coordinate(i);
    if (left.coordinate(i) != base_i || right.coordinate(i) != base_i) {
      report.agrees_below_level = false;
      break;
    }
  }
  return report;
}

std::vector<WitnessReport> empty_interior_scan(const LimitElement &f,
                                               int n_max, int depth) {
  const SigmaValue s = sigma(f, depth);
  if (!s.exact)
    throw DomainError("empty_interior_scan: base element needs an exact sigma");
  if (n_max < s.n + 1)
    throw DomainError("empty_interior_scan: n_max must exceed sigma = " +
                      std::to_string(s.n));
  std::vector<WitnessReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max - s.n));
  for (int n = s.n + 1; n <= n_max; ++n)
    reports.push_back(witness_dichotomy(f, n, depth));
  return reports;
}

AuditTable decomposition_audit(const std::vector<LimitElement> &corpus,
                               int n_max, int depth) {
  AuditTable table;
  table.passed = true;
  for (const LimitElement &e : corpus) {
    AuditRow row;
    row.description = e.description();
    SigmaValue s;
    bool have_sigma = false;
    try {
      s = sigma(e, depth);
      have_sigma = true;
    } catch (const DomainError &) {
      row.note = "not in the stable subgroup by depth " + std::to_string(depth);
    }
    if (have_sigma && !s.exact)
      row.note = "sigma only depth-bounded, not certified";

    if (!have_sigma || !s.exact) {
      ++table.ineligible_count;
      table.rows.push_back(std::move(row));
      continue;
    }

    row.eligible = true;
    row.stratum = s.n;
    ++table.eligible_count;
    ++table.stratum_sizes[s.n];

    // exactly-one-stratum check: certified at N, refuted below N
    const int cert_depth = std::max(depth, s.n + 1);
    row.certificate_ok = sigma_certificate(e, s.n, cert_depth);
    for (int lower = 1; lower < s.n && row.certificate_ok; ++lower)
      if (sigma_certificate(e, lower, cert_depth))
        row.certificate_ok = false;

    row.probe_from = s.n + 1;
    row.probe_to = std::max(n_max, s.n + 1);
    row.scan_ok = true;
    for (const WitnessReport &r : empty_interior_scan(e, row.probe_to, depth)) {
      if (r.branch == Branch::right_escapes)
        ++row.right_count;
      else
        ++row.left_count;
      if (!r.ok())
        row.scan_ok = false;
    }

    if (!row.certificate_ok || !row.scan_ok)
      table.passed = false;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_audit_text(const AuditTable &table) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"element", "stratum", "certificate", "scan"});
  for (const AuditRow &row : table.rows) {
    if (!row.eligible) {
      cells.push_back({row.description, "-", "-", "ineligible: " + row.note});
      continue;
    }
    std::ostringstream scan;
    scan << "levels " << row.probe_from << ".." << row.probe_to << " ";
    scan << (row.scan_ok ? "all escape" : "FAILED");
    scan << " (left " << row.left_count << ", right " << row.right_count << ")";
    cells.push_back({row.description, std::to_string(row.stratum),
                     row.certificate_ok ? "ok" : "FAILED", scan.str()});
  }

  std::array<std::size_t, 4> widths{};
  for (const auto &line : cells)
    for (std::size_t c = 0; c < 4; ++c)
      widths[c] = std::max(widths[c], line[c].size());

  std::ostringstream out;
  for (const auto &line : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << line[c];
      if (c + 1 < 4)
        out << std::string(widths[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  }
  out << '\n';
  out << "strata:";
  for (const auto &[stratum, count] : table.stratum_sizes)
    out << " sigma^-1(" << stratum << ")=" << count;
  if (table.stratum_sizes.empty())
    out << " none";
  out << '\n';
  out << "eligible " << table.eligible_count << ", ineligible "
      << table.ineligible_count << ", audit "
      << (table.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

} // namespace earring
