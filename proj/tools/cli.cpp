#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "subsum/constructions.hpp"
#include "subsum/errors.hpp"
#include "subsum/group.hpp"
#include "subsum/subset.hpp"
#include "subsum/sumset.hpp"
#include "subsum/verifier.hpp"

namespace subsum::cli {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

// "1,3,6", "{1,3,6}", or tuple notation "(1,0),(0,2)" for multi-factor groups.
GroupSubset parse_element_list(const AbelianGroup& g, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  GroupSubset out(g);
  if (s.empty()) return out;

  if (s.find('(') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] != '(') throw PreconditionError("malformed tuple list '" + text + "'");
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw PreconditionError("unterminated tuple in '" + text + "'");
      std::vector<std::uint32_t> coords;
      std::stringstream inner(s.substr(pos + 1, close - pos - 1));
      for (std::string part; std::getline(inner, part, ',');) coords.push_back(parse_uint(part, "coordinate"));
      out.insert(g.from_tuple(coords));
      pos = close + 1;
    }
    return out;
  }

  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) out.insert(g.element(parse_uint(part, "element index")));
  return out;
}

OrderRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_uint(text, "order");
    return {n, n};
  }
  return {parse_uint(std::string_view(text).substr(0, dots), "range start"),
          parse_uint(std::string_view(text).substr(dots + 2), "range end")};
}

std::string braces(const std::vector<std::uint32_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

struct Settings {
  bool json = false;
  std::size_t witness_cap = kDefaultWitnessCap;
  bool symmetry = false;
  unsigned jobs = 1;
  std::uint32_t budget = kDefaultBudget;

  VerifyOptions verify() const { return {witness_cap, symmetry, jobs, budget}; }
};

std::string verdict_detail(const Verdict& v) {
  std::string d;
  if (v.summary.contains("critical_number")) {
    d = "c=" + v.summary["critical_number"].dump();
    if (v.summary.contains("expected_value") && !v.summary["expected_value"].is_null()) {
      d += " (expected " + v.summary["expected_value"].dump() + ")";
    }
  } else if (v.summary.contains("max_missing")) {
    d = "max missing " + v.summary["max_missing"].dump();
  } else if (v.summary.contains("equality_cases")) {
    d = "generating " + v.summary["generating"].dump() + ", equality " + v.summary["equality_cases"].dump();
  } else if (v.status == Status::vacuous && v.params.contains("subset_size")) {
    d = "needs size " + v.params["subset_size"].dump();
  }
  if (!v.witnesses.empty()) d += (d.empty() ? "" : "; ") + std::string("witness ") + braces(v.witnesses.front());
  return d;
}

void print_verdicts(const std::vector<Verdict>& verdicts, bool as_array, const Settings& st, std::ostream& out) {
  if (st.json) {
    if (!as_array && verdicts.size() == 1) {
      out << render(to_json(verdicts.front())) << '\n';
    } else {
      Json arr = Json::array();
      for (const auto& v : verdicts) arr.push_back(to_json(v));
      out << render(arr) << '\n';
    }
    return;
  }
  out << std::left << std::setw(15) << "statement" << std::setw(12) << "group" << std::setw(10) << "status"
      << std::setw(12) << "checked" << std::setw(12) << "violations" << "detail\n";
  for (const auto& v : verdicts) {
    out << std::left << std::setw(15) << v.statement << std::setw(12) << v.group << std::setw(10)
        << to_string(v.status) << std::setw(12) << v.checked << std::setw(12) << v.violations << verdict_detail(v)
        << '\n';
  }
}

int exit_for(const std::vector<Verdict>& verdicts) {
  const bool refuted = std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::refuted; });
  return refuted ? kWitnesses : kOk;
}

void print_construction(const Construction& c, const Settings& st, std::ostream& out) {
  if (st.json) {
    out << render(to_json(c)) << '\n';
    return;
  }
  out << c.name << " in " << c.group.to_string() << ": A = " << braces(c.subset.indices()) << " (" << c.subset.size()
      << " elements)\n";
  for (const auto& claim : c.claims) {
    out << "  " << std::left << std::setw(24) << claim.name << (claim.holds ? "holds" : "FAILS")
        << "  expected " << claim.expected.dump() << ", observed " << claim.observed.dump() << '\n';
  }
}

void print_set_result(const std::string& op, const AbelianGroup& g, const GroupSubset& input, const GroupSubset& result,
                      std::optional<int> h, const Settings& st, std::ostream& out) {
  if (st.json) {
    Json j = Json::object();
    j["operation"] = op;
    j["group"] = g.to_string();
    j["input"] = input.indices();
    if (h) j["h"] = *h;
    j["result"] = result.indices();
    j["size"] = result.size();
    out << render(j) << '\n';
    return;
  }
  out << op << (h ? "(h=" + std::to_string(*h) + ")" : std::string()) << " of " << braces(input.indices()) << " in "
      << g.to_string() << ": " << braces(result.indices()) << " (" << result.size() << " elements)\n";
}

AbelianGroup cyclic_from(const std::string& group_spec, std::uint32_t m, const char* what) {
  if (!group_spec.empty()) {
    auto g = parse_group_spec(group_spec);
    if (!g.is_cyclic()) throw PreconditionError(std::string(what) + " needs a cyclic group, got " + g.to_string());
    return g;
  }
  if (m == 0) throw PreconditionError(std::string(what) + " needs --group or --m");
  return AbelianGroup::cyclic(m);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subset sums and restricted sumsets in finite abelian groups", "subsum"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Settings st;
  app.add_flag("--json", st.json, "Emit JSON certificates");
  app.add_option("--witness-cap", st.witness_cap, "Witnesses kept per witness class")->check(CLI::PositiveNumber);
  app.add_flag("--symmetry", st.symmetry, "Reduce by unit multiplication on cyclic groups");
  app.add_option("--jobs", st.jobs, "Worker threads for exhaustive searches")->check(CLI::PositiveNumber);
  app.add_option("--budget", st.budget, "Largest group order accepted by exhaustive verifiers");

  std::string group_spec;
  std::string set_text;
  int h = 2;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t min_size = 5;
  std::string statement;
  std::string range_text;
  bool cyclic_only = false;
  bool exhaustive = false;
  std::uint64_t order = 0;

  std::function<int()> action;

  auto set_command = [&](const std::string& name, const std::string& help, bool with_h, auto compute) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", group_spec, "Group spec, e.g. Z9 or Z2xZ4")->required();
    sub->add_option("--set", set_text, "Elements as indices (1,3,6) or tuples ((1,0),(0,2))")->required();
    if (with_h) sub->add_option("--h", h, "Number of summands")->required();
    sub->callback([&, name, with_h, compute] {
      action = [&, name, with_h, compute] {
        const auto g = parse_group_spec(group_spec);
        const auto a = parse_element_list(g, set_text);
        print_set_result(name, g, a, compute(g, a), with_h ? std::optional<int>(h) : std::nullopt, st, out);
        return static_cast<int>(kOk);
      };
    });
  };
  set_command("hhat", "Sums of the h-element subsets of a set", true,
              [&](const AbelianGroup& g, const GroupSubset& a) { return h_hat(g, a, h); });
  set_command("sigma", "All nonempty subset sums of a set", false,
              [](const AbelianGroup& g, const GroupSubset& a) { return sigma(g, a); });
  set_command("paircover", "A together with the sums of its 2-subsets", false,
              [](const AbelianGroup& g, const GroupSubset& a) { return pair_cover(g, a); });

  auto* construct = app.add_subcommand("construct", "Generate an explicit example and check its claims");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto constructor = [&](const std::string& name, const std::string& help, auto make, auto configure) {
    auto* sub = construct->add_subcommand(name, help);
    configure(sub);
    sub->callback([&, make] {
      action = [&, make] {
        print_construction(make(), st, out);
        return static_cast<int>(kOk);
      };
    });
  };
  constructor("tight", "Z_{3k} with {1,3,...,3(k-1)}: exactly 2k subset sums", [&] { return tight_example(k); },
              [&](CLI::App* s) { s->add_option("--k", k, "k >= 3")->required(); });
  constructor("even-ce", "Z_m with {1..m/2}: pair cover misses 0", [&] { return even_counterexample(m); },
              [&](CLI::App* s) { s->add_option("--m", m, "even m >= 4")->required(); });
  constructor("mod4-ce", "Z_m, m = 2 mod 4: pair cover misses 0 and m/2-1",
              [&] { return two_mod_four_counterexample(m); },
              [&](CLI::App* s) { s->add_option("--m", m, "m = 2 mod 4, m >= 6")->required(); });
  constructor("near-tight", "Largest subset of G\\{0} whose pair cover is not G",
              [&] { return near_tight_construction(parse_group_spec(group_spec)); },
              [&](CLI::App* s) { s->add_option("--group", group_spec, "Group spec")->required(); });

  auto* verify = app.add_subcommand("verify", "Exhaustively check a statement");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto verifier = [&](const std::string& name, const std::string& help, auto configure, auto body) {
    auto* sub = verify->add_subcommand(name, help);
    configure(sub);
    sub->callback([&, body] { action = body; });
  };
  auto group_opt = [&](CLI::App* s) { s->add_option("--group", group_spec, "Group spec")->required(); };

  verifier("prop3", "Pair cover is complete once 2|A| >= |G| + |G_2|", group_opt, [&] {
    const auto v = verify_pair_cover_threshold(parse_group_spec(group_spec), st.verify());
    print_verdicts({v}, false, st, out);
    return exit_for({v});
  });
  verifier(
      "lemma2", "Search Z_m for sets with 2|A| >= m whose pair cover is incomplete",
      [&](CLI::App* s) {
        s->add_option("--group", group_spec, "Cyclic group spec");
        s->add_option("--m", m, "Modulus (alternative to --group)");
        s->add_flag("--exhaustive", exhaustive, "Scan every size above the minimal one too");
      },
      [&] {
        const auto g = cyclic_from(group_spec, m, "lemma2");
        const auto v = search_lemma2_counterexamples(g.order(), exhaustive, st.verify());
        print_verdicts({v}, false, st, out);
        return exit_for({v});
      });
  verifier(
      "thm1", "Generating S with |S| >= min-size has |sigma(S)| >= min(|G|, 2|S|)",
      [&](CLI::App* s) {
        s->add_option("--group", group_spec, "Group spec")->required();
        s->add_option("--min-size", min_size, "Smallest |S| checked");
      },
      [&] {
        const auto v = verify_subset_sum_bound(parse_group_spec(group_spec), min_size, st.verify());
        print_verdicts({v}, false, st, out);
        return exit_for({v});
      });
  verifier(
      "thm4", "Every A in Z_m with |A| = m/2 + 1 has 3^A = Z_m (even m >= 12)",
      [&](CLI::App* s) {
        s->add_option("--group", group_spec, "Cyclic group spec");
        s->add_option("--m", m, "Modulus (alternative to --group)");
      },
      [&] {
        const auto g = cyclic_from(group_spec, m, "thm4");
        const auto v = verify_three_fold_cover(g.order(), st.verify());
        print_verdicts({v}, false, st, out);
        return exit_for({v});
      });
  verifier("thm5", "Compute the critical number c(G)", group_opt, [&] {
    const auto r = critical_number(parse_group_spec(group_spec), st.verify());
    print_verdicts({r.verdict}, false, st, out);
    return exit_for({r.verdict});
  });
  verifier(
      "sweep", "Run one statement over a range of orders",
      [&](CLI::App* s) {
        s->add_option("--statement", statement, "prop3.1, prop3.2, lemma2-search, thm1, thm4, thm5, thm6")->required();
        s->add_option("--order-range", range_text, "Orders a..b")->required();
        s->add_option("--min-size", min_size, "Smallest |S| for thm1/thm6");
        s->add_flag("--cyclic", cyclic_only, "Only cyclic groups");
        s->add_flag("--exhaustive", exhaustive, "lemma2-search: scan every size");
      },
      [&] {
        SweepOptions so;
        so.verify = st.verify();
        so.cyclic_only = cyclic_only;
        so.min_size = min_size;
        so.exhaustive = exhaustive;
        const auto verdicts = sweep(statement, parse_range(range_text), so);
        print_verdicts(verdicts, true, st, out);
        return exit_for(verdicts);
      });

  auto* groups = app.add_subcommand("groups", "List the abelian groups of order n");
  groups->add_option("n", order, "Group order")->required();
  groups->callback([&] {
    action = [&] {
      const auto list = enumerate_groups_of_order(order);
      if (st.json) {
        Json arr = Json::array();
        for (const auto& g : list) arr.push_back(g.to_string());
        out << render(arr) << '\n';
      } else {
        for (const auto& g : list) out << g.to_string() << '\n';
      }
      return static_cast<int>(kOk);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action() : static_cast<int>(kUsage);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ClaimViolation& e) {
    err << "claim violated: " << e.what() << '\n';
    return kWitnesses;
  } catch (const NoCriticalNumber& e) {
    err << "no critical number: " << e.what() << '\n';
    return kWitnesses;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace subsum::cli
