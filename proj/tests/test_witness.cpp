#include <doctest.h>

#include <string>

#include "earring/witness.hpp"
#include "helpers.hpp"

using namespace earring;

namespace {

const GroupFamily Z = GroupFamily::integers();

Word pw(const std::string &s) { return parse_word(Z, s); }
ReducedWord rw(const std::string &s) { return reduce(Z, pw(s)); }

} // namespace

TEST_CASE("perturbation words and their collapsing coordinates") {
  const LimitElement g2 = perturbation(Z, 2, Side::left);
  CHECK(g2.coordinate(2) == rw("a1 a2 a1^-1 a2^-1"));
  CHECK(g2.coordinate(1).empty());
  CHECK(g2.description() == "iota(a1 a2 a1^-1 a2^-1)");

  const LimitElement g5 = perturbation(Z, 5, Side::left);
  CHECK(g5.coordinate(4).empty());
  for (int i = 1; i < 5; ++i)
    CHECK(g5.coordinate(i).empty());
  CHECK(g5.coordinate(5) == rw("a1 a5 a1^-1 a5^-1"));

  const LimitElement r3 = perturbation(Z, 3, Side::right);
  CHECK(r3.coordinate(3) == rw("a3 a1 a3^-1 a1^-1"));
  CHECK(r3.coordinate(2).empty());

  CHECK_THROWS_AS(perturbation(Z, 1, Side::left), DomainError);
}

TEST_CASE("dichotomy: nonempty low-type first letter forces the left branch") {
  const WitnessReport r = witness_dichotomy(iota(Z, pw("a1")), 2);
  CHECK(r.base == "iota(a1)");
  CHECK(r.base_sigma.n == 1);
  CHECK(r.base_sigma.exact);
  CHECK(r.level == 2);
  CHECK(r.first_letter_type == 1);
  CHECK(r.branch == Branch::left_escapes);
  CHECK(r.left_escapes);
  CHECK(r.kappa1_base == pw("a1"));
  CHECK(r.kappa1_left == pw("a1 a1^-1 a1"));
  CHECK(r.equation_chain_holds);
  CHECK(r.prefix_extension_holds);
  CHECK(r.escape_decertified);
  CHECK(r.agrees_below_level);
  CHECK(r.escaped());
  CHECK(r.ok());
}

TEST_CASE("dichotomy: the empty coordinate takes the left branch") {
  const WitnessReport r = witness_dichotomy(identity_element(Z), 2);
  CHECK(!r.first_letter_type.has_value());
  CHECK(r.branch == Branch::left_escapes);
  CHECK(r.kappa1_base.empty());
  CHECK(r.kappa1_left == pw("a1 a1^-1"));
  // the right perturbation also escapes here, but the branch stays on the
  // certified case-split side
  CHECK(r.right_escapes);
  CHECK(r.kappa1_right == pw("a1 a1^-1"));
  CHECK(r.ok());
}

TEST_CASE("dichotomy: a type-n first letter forces the right branch") {
  const WitnessReport r = witness_dichotomy(iota(Z, pw("a2 a1")), 2);
  CHECK(r.first_letter_type == 2);
  CHECK(r.branch == Branch::right_escapes);
  CHECK(r.right_escapes);
  CHECK(r.kappa1_base == pw("a1"));
  CHECK(r.kappa1_right == pw("a1 a1^-1 a1"));
  // the left perturbation is absorbed: g_2 * (a2 a1) collapses to (a1 a2)
  CHECK(!r.left_escapes);
  CHECK(r.kappa1_left == pw("a1"));
  CHECK(r.ok());
}

TEST_CASE("dichotomy preconditions") {
  const LimitElement c = iota(Z, pw("a1 a2 a1^-1 a2^-1"));
  CHECK_THROWS_WITH_AS(witness_dichotomy(c, 2),
                       doctest::Contains("must be >= sigma + 1"), DomainError);
  CHECK_THROWS_AS(witness_dichotomy(telescope_element(Z), 5), DomainError);
}

TEST_CASE("empty_interior_scan probes every level past sigma") {
  const LimitElement c = iota(Z, pw("a1 a2 a1^-1 a2^-1"));
  const auto reports = empty_interior_scan(c, 10);
  REQUIRE(reports.size() == 8);
  int level = 3;
  for (const WitnessReport &r : reports) {
    CHECK(r.level == level++);
    CHECK(r.ok());
  }

  const auto id_reports = empty_interior_scan(identity_element(Z), 5);
  REQUIRE(id_reports.size() == 4);
  for (const WitnessReport &r : id_reports) {
    CHECK(r.branch == Branch::left_escapes);
    CHECK(r.ok());
  }

  // convergence schedule, checked directly at n = 6
  const LimitElement f6 = lim_multiply(perturbation(Z, 6, Side::left), c);
  for (int i = 1; i <= 5; ++i)
    CHECK(f6.coordinate(i) == c.coordinate(i));

  CHECK_THROWS_AS(empty_interior_scan(c, 2), DomainError);
}

TEST_CASE("decomposition_audit partitions an exhaustive corpus") {
  std::vector<LimitElement> corpus;
  for (const ReducedWord &w : enumerate_reduced_words(Z, 3, 3, 1))
    corpus.push_back(iota(Z, w.letters()));

  const AuditTable table = decomposition_audit(corpus, 5);
  CHECK(table.passed);
  CHECK(table.eligible_count == 127);
  CHECK(table.ineligible_count == 0);
  CHECK(table.rows.size() == 127);

  int total = 0;
  for (const auto &[stratum, count] : table.stratum_sizes) {
    CHECK(stratum >= 1);
    CHECK(stratum <= 3);
    total += count;
  }
  CHECK(total == 127);

  for (const AuditRow &row : table.rows) {
    CHECK(row.eligible);
    CHECK(row.certificate_ok);
    CHECK(row.scan_ok);
    CHECK(row.probe_from == row.stratum + 1);
    CHECK(row.probe_to == 5);
    CHECK(row.left_count + row.right_count == row.probe_to - row.stratum);
  }
}

TEST_CASE("decomposition_audit pinned small corpora") {
  const AuditTable id_table =
      decomposition_audit({identity_element(Z)}, 4);
  CHECK(id_table.passed);
  CHECK(id_table.stratum_sizes == std::map<int, int>{{1, 1}});
  CHECK(id_table.rows.front().left_count == 3);
  CHECK(id_table.rows.front().right_count == 0);

  const AuditTable mixed = decomposition_audit(
      {identity_element(Z), telescope_element(Z)}, 4);
  CHECK(mixed.passed);
  CHECK(mixed.eligible_count == 1);
  CHECK(mixed.ineligible_count == 1);
  CHECK(!mixed.rows[1].eligible);
  CHECK(mixed.rows[1].note ==
        "not in the stable subgroup by depth " + std::to_string(default_depth));

  // a stream whose sigma is only depth-bounded is ineligible too
  const Word w = pw("a1 a2 a1^-1 a2^-1");
  const LimitElement s = stream_element(
      Z, "stream", [w](int n) { return reduce(Z, kappa(n, w)); });
  const AuditTable bounded = decomposition_audit({s}, 4);
  CHECK(bounded.passed);
  CHECK(bounded.ineligible_count == 1);
  CHECK(bounded.rows.front().note ==
        "sigma only depth-bounded, not certified");

  // probe ceilings below sigma+1 are clamped, never an error
  const AuditTable clamped =
      decomposition_audit({iota(Z, pw("a1 a3 a1^-1 a3^-1"))}, 2);
  CHECK(clamped.passed);
  CHECK(clamped.rows.front().probe_from == 4);
  CHECK(clamped.rows.front().probe_to == 4);
}

TEST_CASE("render_audit_text lays out the table") {
  const AuditTable table = decomposition_audit(
      {identity_element(Z), iota(Z, pw("a1 a2 a1^-1 a2^-1")),
       telescope_element(Z)},
      4);
  const std::string text = render_audit_text(table);
  CHECK(text.find("element") != std::string::npos);
  CHECK(text.find("stratum") != std::string::npos);
  CHECK(text.find("iota(a1 a2 a1^-1 a2^-1)") != std::string::npos);
  CHECK(text.find("ineligible: not in the stable subgroup") !=
        std::string::npos);
  CHECK(text.find("strata: sigma^-1(1)=1 sigma^-1(2)=1") != std::string::npos);
  CHECK(text.find("eligible 2, ineligible 1, audit PASS") !=
        std::string::npos);
  CHECK(text.find("all escape") != std::string::npos);
}
