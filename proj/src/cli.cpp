#include "earring/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "earring/witness.hpp"

namespace earring {

namespace {

using Json = nlohmann::ordered_json;

GroupFamily family_from_name(const std::string &name) {
  if (name == "z")
    return GroupFamily::integers();
  if (name.rfind("zmod:", 0) == 0) {
    Value m = 0;
    try {
      m = std::stoll(name.substr(5));
    } catch (const std::exception &) {
      m = 0;
    }
    if (m >= 2)
      return GroupFamily::integers_mod(m);
  }
  throw DomainError("unknown family: " + name);
}

std::string check_family_name(const std::string &name) {
  try {
    family_from_name(name);
    return {};
  } catch (const DomainError &) {
    return "family must be z or zmod:<m> with m >= 2";
  }
}

LimitElement element_from_arg(const GroupFamily &family,
                              const std::string &arg) {
  if (arg == "telescope")
    return telescope_element(family);
  return iota(family, parse_word(family, arg));
}

Json sigma_json(const SigmaValue &s) {
  Json j;
  j["N"] = s.n;
  if (s.exact) {
    j["exactness"] = "exact";
  } else {
    j["exactness"] = "bounded_by_depth";
    j["depth"] = s.depth;
  }
  return j;
}

std::string sigma_text(const SigmaValue &s) {
  if (s.exact)
    return "N = " + std::to_string(s.n) + " (exact)";
  return "N = " + std::to_string(s.n) + " (bounded by depth " +
         std::to_string(s.depth) + ")";
}

const char *branch_name(Branch b) {
  switch (b) {
  case Branch::left_escapes:
    return "left_escapes";
  case Branch::right_escapes:
    return "right_escapes";
  case Branch::both_escape:
    return "both_escape";
  }
  return "?";
}

Json report_json(const GroupFamily &family, const WitnessReport &r) {
  Json j;
  j["base"] = r.base;
  j["base_sigma"] = sigma_json(r.base_sigma);
  j["level"] = r.level;
  if (r.first_letter_type)
    j["first_letter_type"] = *r.first_letter_type;
  else
    j["first_letter_type"] = nullptr;
  j["branch"] = branch_name(r.branch);
  j["left_escapes"] = r.left_escapes;
  j["right_escapes"] = r.right_escapes;
  j["equation_chain_holds"] = r.equation_chain_holds;
  j["prefix_extension_holds"] = r.prefix_extension_holds;
  j["escape_decertified"] = r.escape_decertified;
  j["agrees_below_level"] = r.agrees_below_level;
  j["kappa1_base"] = format_word(family, r.kappa1_base);
  j["kappa1_left"] = format_word(family, r.kappa1_left);
  j["kappa1_right"] = format_word(family, r.kappa1_right);
  return j;
}

std::string report_text(const GroupFamily &family, const WitnessReport &r) {
  std::ostringstream out;
  out << "level " << r.level << ": branch=" << branch_name(r.branch)
      << " first_letter_type=";
  if (r.first_letter_type)
    out << *r.first_letter_type;
  else
    out << "none";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << " left_escapes=" << yn(r.left_escapes)
      << " right_escapes=" << yn(r.right_escapes)
      << " chain=" << yn(r.equation_chain_holds)
      << " prefix=" << yn(r.prefix_extension_holds)
      << " decertified=" << yn(r.escape_decertified)
      << " agrees_below=" << yn(r.agrees_below_level) << "\n";
  out << "  kappa_1(f(n))   = " << format_word(family, r.kappa1_base) << "\n";
  out << "  kappa_1(f_n(n)) = " << format_word(family, r.kappa1_left) << "\n";
  out << "  kappa_1(f^n(n)) = " << format_word(family, r.kappa1_right) << "\n";
  return out.str();
}

void emit_report(std::ostream &out, const std::string &format,
                 const std::string &command, const GroupFamily &family,
                 const Json &inputs, const Json &result,
                 const std::string &text) {
  if (format == "json") {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["family"] = family.name();
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

Json audit_row_json(const AuditRow &row) {
  Json j;
  j["element"] = row.description;
  j["eligible"] = row.eligible;
  if (!row.eligible) {
    j["note"] = row.note;
    return j;
  }
  j["stratum"] = row.stratum;
  j["certificate_ok"] = row.certificate_ok;
  j["probe_from"] = row.probe_from;
  j["probe_to"] = row.probe_to;
  j["left_count"] = row.left_count;
  j["right_count"] = row.right_count;
  j["scan_ok"] = row.scan_ok;
  return j;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
  CLI::App app{"word calculus for free products of an indexed family of "
               "groups: normal forms, limit coordinates, the stabilization "
               "stratification, and its escape witnesses",
               "earring"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string family_arg = "z";
  std::string format_arg = "text";
  int depth = default_depth;
  app.add_option("--family", family_arg, "letter groups: z or zmod:<m>")
      ->check(check_family_name);
  app.add_option("--format", format_arg, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--depth", depth, "working depth for coordinate scans")
      ->check(CLI::Range(2, 100000));

  std::string word_arg, u_arg, v_arg, element_arg;
  int kappa_m = 1, psi_n = 1, stab_m = 1;
  int witness_n = 0, witness_n_max = 0;
  int audit_max_len = 3, audit_max_type = 3, audit_n_max = 6;
  Value audit_values = 1;
  bool check_membership = false;

  CLI::App *c_reduce = app.add_subcommand("reduce", "normal form of a word");
  c_reduce->add_option("word", word_arg, "word expression")->required();

  CLI::App *c_mul = app.add_subcommand("mul", "product of two reduced words");
  c_mul->add_option("u", u_arg, "word expression")->required();
  c_mul->add_option("v", v_arg, "word expression")->required();

  CLI::App *c_inv = app.add_subcommand("inv", "inverse of a reduced word");
  c_inv->add_option("word", word_arg, "word expression")->required();

  CLI::App *c_kappa = app.add_subcommand(
      "kappa", "delete every letter of type > m (no reduction)");
  c_kappa->add_option("word", word_arg, "word expression")->required();
  c_kappa->add_option("--m", kappa_m, "deletion level")
      ->required()
      ->check(CLI::Range(1, 100000));

  CLI::App *c_psi = app.add_subcommand(
      "psi", "bonding map G_{n+1} -> G_n: delete type n+1, then reduce");
  c_psi->add_option("word", word_arg, "word expression")->required();
  c_psi->add_option("--n", psi_n, "target level")
      ->required()
      ->check(CLI::Range(1, 100000));

  CLI::App *c_coords = app.add_subcommand(
      "coords", "coordinates 1..depth of an element (word expression or "
                "\"telescope\")");
  c_coords->add_option("element", element_arg, "element")->required();

  CLI::App *c_sigma =
      app.add_subcommand("sigma", "stabilization stratum of an element");
  c_sigma->add_option("element", element_arg, "element")->required();

  CLI::App *c_stab = app.add_subcommand(
      "stab", "scan kappa_m images of the coordinates for a constant tail");
  c_stab->add_option("element", element_arg, "element")->required();
  c_stab->add_option("--m", stab_m, "deletion level")
      ->check(CLI::Range(1, 100000));

  CLI::App *c_tel = app.add_subcommand(
      "telescope", "kappa_1 image lengths of the telescope element");
  c_tel->add_flag("--check-membership", check_membership,
                  "also run the m=1 stabilization check");

  CLI::App *c_witness = app.add_subcommand(
      "witness", "perturbation dichotomy probes against an element");
  c_witness->add_option("element", element_arg, "element")->required();
  CLI::Option *opt_n = c_witness->add_option("--n", witness_n, "probe level")
                           ->check(CLI::Range(2, 100000));
  CLI::Option *opt_n_max =
      c_witness->add_option("--n-max", witness_n_max, "scan levels up to here")
          ->check(CLI::Range(2, 100000));
  opt_n->excludes(opt_n_max);
  opt_n_max->excludes(opt_n);

  CLI::App *c_audit = app.add_subcommand(
      "audit", "stratum decomposition audit over an enumerated corpus");
  c_audit->add_option("--max-len", audit_max_len, "max word length")
      ->check(CLI::Range(0, 8));
  c_audit->add_option("--max-type", audit_max_type, "max letter type")
      ->check(CLI::Range(1, 100000));
  c_audit->add_option("--values", audit_values,
                      "letter values drawn from -v..v (nonzero)")
      ->check(CLI::Range(1, 100000));
  c_audit->add_option("--n-max", audit_n_max, "probe ceiling per element")
      ->check(CLI::Range(2, 100000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const GroupFamily family = family_from_name(family_arg);
    std::string command;
    Json inputs = Json::object();
    Json result;
    std::string text;

    if (app.got_subcommand(c_reduce)) {
      command = "reduce";
      inputs["word"] = word_arg;
      const ReducedWord r = reduce(family, parse_word(family, word_arg));
      result = Json{{"word", format_word(family, r)}};
      text = format_word(family, r) + "\n";
    } else if (app.got_subcommand(c_mul)) {
      command = "mul";
      inputs["u"] = u_arg;
      inputs["v"] = v_arg;
      const ReducedWord u = reduce(family, parse_word(family, u_arg));
      const ReducedWord v = reduce(family, parse_word(family, v_arg));
      const ReducedWord r = multiply(family, u, v);
      result = Json{{"word", format_word(family, r)}};
      text = format_word(family, r) + "\n";
    } else if (app.got_subcommand(c_inv)) {
      command = "inv";
      inputs["word"] = word_arg;
      const ReducedWord r =
          invert(family, reduce(family, parse_word(family, word_arg)));
      result = Json{{"word", format_word(family, r)}};
      text = format_word(family, r) + "\n";
    } else if (app.got_subcommand(c_kappa)) {
      command = "kappa";
      inputs["word"] = word_arg;
      inputs["m"] = kappa_m;
      const Word image = kappa(kappa_m, parse_word(family, word_arg));
      result = Json{{"word", format_word(family, image)}};
      text = format_word(family, image) + "\n";
    } else if (app.got_subcommand(c_psi)) {
      command = "psi";
      inputs["word"] = word_arg;
      inputs["n"] = psi_n;
      const ReducedWord r =
          psi(family, psi_n, reduce(family, parse_word(family, word_arg)));
      result = Json{{"word", format_word(family, r)}};
      text = format_word(family, r) + "\n";
    } else if (app.got_subcommand(c_coords)) {
      command = "coords";
      const LimitElement e = element_from_arg(family, element_arg);
      inputs["element"] = e.description();
      inputs["depth"] = depth;
      Json coords = Json::array();
      std::ostringstream lines;
      for (int n = 1; n <= depth; ++n) {
        const std::string w = format_word(family, e.coordinate(n));
        coords.push_back(w);
        lines << n << ": " << w << "\n";
      }
      result = Json{{"coordinates", coords}};
      text = lines.str();
    } else if (app.got_subcommand(c_sigma)) {
      command = "sigma";
      const LimitElement e = element_from_arg(family, element_arg);
      inputs["element"] = e.description();
      inputs["depth"] = depth;
      const SigmaValue s = sigma(e, depth);
      result = sigma_json(s);
      text = sigma_text(s) + "\n";
    } else if (app.got_subcommand(c_stab)) {
      command = "stab";
      const LimitElement e = element_from_arg(family, element_arg);
      inputs["element"] = e.description();
      inputs["m"] = stab_m;
      inputs["depth"] = depth;
      const StabilizationReport r = stabilization_check(e, stab_m, depth);
      result = Json::object();
      result["m"] = r.m;
      result["depth"] = r.depth;
      result["verdict"] =
          r.stable() ? "stable by depth" : "not stable by depth";
      if (r.stable())
        result["stable_from"] = *r.stable_from;
      else
        result["stable_from"] = nullptr;
      result["final_image"] = format_word(family, r.final_image);
      std::ostringstream lines;
      if (r.stable())
        lines << "verdict: stable from " << *r.stable_from << " (depth "
              << r.depth << ")\n";
      else
        lines << "verdict: not stable by depth " << r.depth << "\n";
      lines << "final kappa_" << r.m
            << " image: " << format_word(family, r.final_image) << "\n";
      text = lines.str();
    } else if (app.got_subcommand(c_tel)) {
      command = "telescope";
      inputs["depth"] = depth;
      inputs["check_membership"] = check_membership;
      const LimitElement tel = telescope_element(family);
      Json lengths = Json::array();
      std::ostringstream lines;
      for (int n = 1; n <= depth; ++n) {
        const std::size_t len = kappa(1, tel.coordinate(n)).size();
        lengths.push_back(len);
        lines << "n=" << n << ": kappa_1 length " << len << "\n";
      }
      result = Json{{"kappa1_lengths", lengths}};
      if (check_membership) {
        const StabilizationReport r = stabilization_check(tel, 1, depth);
        const std::string verdict =
            r.stable() ? "stable by depth" : "not stable by depth";
        result["verdict"] = verdict;
        lines << "membership: " << verdict << "\n";
      }
      text = lines.str();
    } else if (app.got_subcommand(c_witness)) {
      command = "witness";
      const LimitElement e = element_from_arg(family, element_arg);
      inputs["element"] = e.description();
      if (opt_n->count() == 0 && opt_n_max->count() == 0) {
        err << "witness: exactly one of --n or --n-max is required\n";
        return 1;
      }
      inputs["depth"] = depth;
      if (opt_n->count() > 0) {
        inputs["n"] = witness_n;
        const WitnessReport r = witness_dichotomy(e, witness_n, depth);
        result = report_json(family, r);
        text = "base: " + r.base + "   sigma: " + sigma_text(r.base_sigma) +
               "\n" + report_text(family, r);
      } else {
        inputs["n_max"] = witness_n_max;
        const auto reports = empty_interior_scan(e, witness_n_max, depth);
        Json arr = Json::array();
        bool all_ok = true;
        std::ostringstream lines;
        lines << "base: " << e.description()
              << "   sigma: " << sigma_text(reports.front().base_sigma)
              << "\n";
        for (const WitnessReport &r : reports) {
          arr.push_back(report_json(family, r));
          all_ok = all_ok && r.ok();
          lines << report_text(family, r);
        }
        lines << reports.size() << " probes, "
              << (all_ok ? "all escaped" : "ESCAPE FAILURE") << "\n";
        result = Json{{"reports", arr}, {"all_ok", all_ok}};
        text = lines.str();
      }
    } else if (app.got_subcommand(c_audit)) {
      command = "audit";
      inputs["max_len"] = audit_max_len;
      inputs["max_type"] = audit_max_type;
      inputs["values"] = audit_values;
      inputs["n_max"] = audit_n_max;
      inputs["depth"] = depth;
      std::vector<LimitElement> corpus;
      for (const ReducedWord &w : enumerate_reduced_words(
               family, audit_max_len, audit_max_type, audit_values))
        corpus.push_back(iota(family, w.letters()));
      const AuditTable table = decomposition_audit(corpus, audit_n_max, depth);
      Json rows = Json::array();
      for (const AuditRow &row : table.rows)
        rows.push_back(audit_row_json(row));
      Json strata = Json::object();
      for (const auto &[stratum, count] : table.stratum_sizes)
        strata[std::to_string(stratum)] = count;
      result = Json::object();
      result["rows"] = rows;
      result["strata"] = strata;
      result["eligible"] = table.eligible_count;
      result["ineligible"] = table.ineligible_count;
      result["passed"] = table.passed;
      text = render_audit_text(table);
      if (!table.passed) {
        emit_report(out, format_arg, command, family, inputs, result, text);
        return 2;
      }
    }

    emit_report(out, format_arg, command, family, inputs, result, text);
    return 0;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace earring
