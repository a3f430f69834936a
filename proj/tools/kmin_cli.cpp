#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmin/fixtures.hpp"
#include "kmin/kring.hpp"
#include "kmin/poset.hpp"
#include "kmin/tableau.hpp"
#include "kmin/words.hpp"

using namespace kmin;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, BadInput = 2, Refused = 3, Budget = 4 };

struct Globals {
  unsigned threads = 0;
  bool assume_urp = false;
  bool as_json = false;
  std::size_t budget = default_budget();
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json tableau_json(const Tableau& T) {
  return {{"poset", T.poset().spec()},
          {"inner", rows_to_string(T.inner_shape().rows())},
          {"outer", rows_to_string(T.outer_shape().rows())},
          {"literal", T.to_literal()},
          {"rows", T.rows()}};
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("literal"))
    throw ParseError("tableau JSON needs \"poset\" and \"literal\"");
  return Tableau::parse(Poset::get(j.at("poset").get<std::string>()), j.at("literal").get<std::string>());
}

template <char Sym>
json element_json(const BasisElement<Sym>& e) {
  json terms = json::array();
  for (const auto& [s, c] : e.terms()) terms.push_back({{"shape", rows_to_string(s.rows())}, {"coeff", c}});
  json j = {{"poset", e.poset().spec()}, {"basis", std::string(1, Sym)}, {"terms", terms}};
  if (e.unverified()) j["unverified"] = true;
  return j;
}

std::string shape_text(const Shape& s) {
  std::string t = rows_to_string(s.rows());
  return t.empty() ? "()" : "(" + t + ")";
}

Tableau read_tableau(const Poset& p, const std::string& lit) { return Tableau::parse(p, lit); }

// ------------------------------------------------------------------ lr

struct LrArgs {
  std::string poset, l, m, n;
  bool tableaux = false;
};

int cmd_lr(const Globals& g, const LrArgs& a) {
  const Poset& p = Poset::get(a.poset);
  Shape lam = Shape::parse(p, a.l), mu = Shape::parse(p, a.m);
  RingOptions opts{g.assume_urp};
  GammaElement result(p);
  if (!a.n.empty()) {
    Shape nu = Shape::parse(p, a.n);
    result.add(nu, structure_constant(lam, mu, nu, opts));
    if (!ring_supported(p)) result.mark_unverified();
  } else {
    result = product(lam, mu, opts);
  }
  std::vector<Tableau> tabs;
  if (a.tableaux)
    tabs = a.n.empty() ? product_tableaux(lam, mu, opts) : product_tableaux(lam, mu, Shape::parse(p, a.n), opts);
  if (g.as_json) {
    json j = element_json(result);
    j["lambda"] = rows_to_string(lam.rows());
    j["mu"] = rows_to_string(mu.rows());
    if (!a.n.empty()) j["nu"] = rows_to_string(Shape::parse(p, a.n).rows());
    if (a.tableaux) {
      json arr = json::array();
      for (const auto& t : tabs) arr.push_back(tableau_json(t));
      j["tableaux"] = arr;
    }
    emit(j);
    return Ok;
  }
  if (!a.n.empty()) {
    std::cout << result.coeff(Shape::parse(p, a.n)) << "\n";
  } else {
    std::size_t w = 2;
    for (const auto& [s, c] : result.terms()) w = std::max(w, shape_text(s).size());
    for (const auto& [s, c] : result.terms()) {
      std::string st = shape_text(s);
      std::cout << st << std::string(w - st.size() + 2, ' ') << c << "\n";
    }
    if (result.is_zero()) std::cout << "0\n";
  }
  if (result.unverified()) std::cout << "# unverified: poset not known to have unique rectification targets\n";
  for (const auto& t : tabs) std::cout << "\n" << t.render();
  return Ok;
}

// ------------------------------------------------------------------ urt

struct UrtArgs {
  std::string poset, tableau;
  bool all = false;
  int max_size = -1;
  bool pack = false;
};

json verdict_json(const UrtVerdict& v, const Globals& g) {
  json j = {{"status", to_string(v.status)}, {"class_size", v.class_size}, {"reason", v.reason},
            {"budget", g.budget}, {"exhausted", v.reason.rfind("budget", 0) == 0}};
  if (v.witness) j["witness"] = tableau_json(*v.witness);
  return j;
}

bool budget_hit(const UrtVerdict& v) { return v.status == UrtStatus::Inconclusive && v.reason.rfind("budget", 0) == 0; }

int cmd_urt(const Globals& g, const UrtArgs& a) {
  const Poset& p = Poset::get(a.poset);
  UrtOptions opts{g.budget, a.pack};
  if (a.all) {
    UrtCensus c = urt_census(p, a.max_size, opts, [&](const Shape& s) {
      std::fprintf(stderr, "urt census %s: shape %s done\n", p.spec().c_str(), shape_text(s).c_str());
    });
    bool exhausted = c.inconclusive > 0 && c.failure_reason.rfind("budget", 0) == 0;
    if (g.as_json) {
      json j = {{"poset", p.spec()}, {"shapes", c.shapes}, {"tableaux", c.tableaux}, {"certified", c.certified},
                {"refuted", c.refuted}, {"inconclusive", c.inconclusive}, {"budget", g.budget},
                {"exhausted", exhausted}};
      if (c.first_failure) j["first_failure"] = tableau_json(*c.first_failure);
      emit(j);
    } else {
      std::cout << p.spec() << ": " << c.tableaux << " tableaux over " << c.shapes << " shapes; " << c.certified
                << " certified, " << c.refuted << " refuted, " << c.inconclusive << " inconclusive\n";
      if (c.first_failure)
        std::cout << "first failure (" << c.failure_reason << "):\n" << c.first_failure->render();
      std::cout << "budget " << g.budget << (exhausted ? " (exhausted)" : " (not exhausted)") << "\n";
    }
    return exhausted ? Budget : Ok;
  }
  if (a.tableau.empty()) throw CLI::ValidationError("urt", "give --tableau or --all");
  Tableau T = read_tableau(p, a.tableau);
  if (!T.straight()) {
    // Skew input: a refutation is two distinct rectifications.
    auto rects = rectify_all(T, g.budget);
    std::vector<UrtVerdict> verdicts;
    for (const auto& r : rects) verdicts.push_back(is_urt(r, opts));
    bool refuted = rects.size() > 1;
    bool exhausted = false;
    for (const auto& v : verdicts) exhausted = exhausted || budget_hit(v);
    std::string status = refuted ? "refuted" : to_string(verdicts.front().status);
    if (g.as_json) {
      json arr = json::array();
      for (std::size_t i = 0; i < rects.size(); ++i) {
        json r = tableau_json(rects[i]);
        r["verdict"] = verdict_json(verdicts[i], g);
        arr.push_back(r);
      }
      emit({{"status", status}, {"tableau", tableau_json(T)}, {"rectifications", arr}, {"budget", g.budget},
            {"exhausted", exhausted}});
    } else {
      std::cout << status << ": " << rects.size() << " rectification" << (rects.size() == 1 ? "" : "s") << "\n";
      for (std::size_t i = 0; i < rects.size(); ++i)
        std::cout << "\n" << rects[i].render() << "  " << to_string(verdicts[i].status) << " ("
                  << verdicts[i].reason << ")\n";
      std::cout << "budget " << g.budget << (exhausted ? " (exhausted)" : " (not exhausted)") << "\n";
    }
    return exhausted ? Budget : Ok;
  }
  UrtVerdict v = is_urt(T, opts);
  if (g.as_json) {
    json j = verdict_json(v, g);
    j["tableau"] = tableau_json(T);
    emit(j);
  } else {
    std::cout << to_string(v.status) << ": " << v.reason << " (class size " << v.class_size << ")\n";
    if (v.witness) std::cout << "\n" << T.render() << "\n" << v.witness->render();
    std::cout << "budget " << g.budget << (budget_hit(v) ? " (exhausted)" : " (not exhausted)") << "\n";
  }
  return budget_hit(v) ? Budget : Ok;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Globals& g, const std::vector<std::string>& only, bool list) {
  if (list) {
    for (const auto& f : reference_fixtures()) std::cout << f.id << "  " << f.description << "\n";
    return Ok;
  }
  auto results = run_fixtures(only, [&](const FixtureResult& r) {
    std::fprintf(stderr, "%s %s (%.2fs)\n", r.pass ? "pass" : "FAIL", r.id.c_str(), r.seconds);
  });
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (g.as_json)
      arr.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    else
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
  }
  if (g.as_json) emit({{"pass", all}, {"fixtures", arr}});
  return all ? Ok : Mismatch;
}

// ------------------------------------------------------------------ class / rectify / show

int cmd_class(const Globals& g, const std::string& poset, const std::string& lit, bool show_members) {
  Tableau T = read_tableau(Poset::get(poset), lit);
  JdtClass K = jdt_class(T, g.budget);
  auto straight = K.straight_members();
  if (g.as_json) {
    json s = json::array(), m = json::array();
    for (const auto& t : straight) s.push_back(tableau_json(t));
    if (show_members)
      for (const auto& t : K.members) m.push_back(tableau_json(t));
    json j = {{"seed", tableau_json(T)}, {"size", K.members.size()}, {"budget", g.budget},
              {"exhausted", !K.exhausted}, {"touches_boundary", K.touches_boundary}, {"straight", s}};
    if (show_members) j["members"] = m;
    emit(j);
  } else {
    std::cout << "class size " << K.members.size() << (K.exhausted ? "" : " (budget exhausted)") << ", "
              << straight.size() << " straight member" << (straight.size() == 1 ? "" : "s")
              << (K.touches_boundary ? ", reaches the window boundary" : "") << "\n";
    const auto& list = show_members ? K.members : straight;
    for (const auto& t : list) std::cout << "\n" << t.render();
    std::cout << "budget " << g.budget << (K.exhausted ? " (not exhausted)" : " (exhausted)") << "\n";
  }
  return K.exhausted ? Ok : Budget;
}

int cmd_rectify(const Globals& g, const std::string& poset, const std::string& lit, bool all) {
  Tableau T = read_tableau(Poset::get(poset), lit);
  std::vector<Tableau> out = all ? rectify_all(T, g.budget) : std::vector<Tableau>{rect_greedy(T)};
  if (g.as_json) {
    json arr = json::array();
    for (const auto& t : out) arr.push_back(tableau_json(t));
    json j = {{"tableau", tableau_json(T)}, {"mode", all ? "all" : "greedy"}, {"rectifications", arr}};
    if (all) j["budget"] = g.budget, j["exhausted"] = false;
    emit(j);
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? "\n" : "") << out[i].render();
  }
  return Ok;
}

struct ShowArgs {
  std::string poset, tableau, minimal, json_in;
};

int cmd_show(const Globals& g, const ShowArgs& a) {
  std::optional<Tableau> T;
  if (!a.json_in.empty()) {
    json j;
    try {
      j = json::parse(a.json_in == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : a.json_in);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what());
    }
    T = tableau_from_json(j);
  } else {
    if (a.poset.empty()) throw ParseError("show needs --poset");
    const Poset& p = Poset::get(a.poset);
    if (!a.minimal.empty())
      T = minimal_tableau(Shape::parse(p, a.minimal));
    else if (!a.tableau.empty())
      T = read_tableau(p, a.tableau);
    else
      throw ParseError("show needs --tableau, --minimal or --json-in");
  }
  if (g.as_json)
    emit(tableau_json(*T));
  else
    std::cout << T->render();
  return Ok;
}

// ------------------------------------------------------------------ word

int cmd_word_equiv(const Globals& g, const std::string& u, const std::string& v, bool weak, int slack) {
  Word a = parse_word(u), b = parse_word(v);
  EquivOptions opts{g.budget, slack};
  EquivVerdict r = weak ? weak_kknuth_equiv(a, b, opts) : kknuth_equiv(a, b, opts);
  bool exhausted = r.status == Equiv::Inconclusive && r.explored >= opts.budget;
  if (g.as_json) {
    json path = json::array();
    for (const auto& w : r.path) path.push_back(w);
    emit({{"u", a}, {"v", b}, {"weak", weak}, {"status", to_string(r.status)}, {"reason", r.reason},
          {"explored", r.explored}, {"budget", g.budget}, {"exhausted", exhausted}, {"path", path}});
  } else {
    std::cout << to_string(r.status) << (r.reason.empty() ? "" : ": " + r.reason) << " (" << r.explored << " words explored)\n";
    for (const auto& w : r.path) std::cout << "  " << to_string(w) << "\n";
    std::cout << "budget " << g.budget << (exhausted ? " (exhausted)" : " (not exhausted)") << "\n";
  }
  return r.status == Equiv::Inconclusive && exhausted ? Budget : Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Increasing tableaux, K-theoretic jeu de taquin and minuscule structure constants"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (default: available cores)");
  app.add_flag("--assume-urp", g.assume_urp, "allow posets not known to have unique rectification targets");
  app.add_flag("--json", g.as_json, "JSON output");
  app.add_option("--budget", g.budget, "search budget (default: KMIN_BUDGET or 20000000)");

  LrArgs lr;
  auto* lr_cmd = app.add_subcommand("lr", "structure constants c^nu_{lambda,mu}");
  lr_cmd->add_option("--poset", lr.poset, "poset spec")->required();
  lr_cmd->add_option("--l", lr.l, "lambda, e.g. 5,1 (\"\" for empty)")->required();
  lr_cmd->add_option("--m", lr.m, "mu")->required();
  lr_cmd->add_option("--n", lr.n, "nu (default: all)");
  lr_cmd->add_flag("--tableaux", lr.tableaux, "list contributing tableaux");

  UrtArgs urt;
  auto* urt_cmd = app.add_subcommand("urt", "unique rectification target check");
  urt_cmd->add_option("--poset", urt.poset, "poset spec")->required();
  urt_cmd->add_option("--tableau", urt.tableau, "tableau literal");
  urt_cmd->add_flag("--all", urt.all, "every packed straight tableau of the poset");
  urt_cmd->add_option("--max-size", urt.max_size, "largest shape size for --all");
  urt_cmd->add_flag("--pack", urt.pack, "pack values before checking");

  std::vector<std::string> only;
  bool list = false;
  auto* ver_cmd = app.add_subcommand("verify-paper", "run the fixture suite");
  ver_cmd->alias("verify");
  ver_cmd->add_option("--only", only, "fixture ids")->delimiter(',');
  ver_cmd->add_flag("--list", list, "list fixture ids");

  std::string poset, lit;
  bool members = false, all = false, greedy = false;
  auto* cls_cmd = app.add_subcommand("class", "jeu de taquin class of a tableau");
  cls_cmd->add_option("--poset", poset, "poset spec")->required();
  cls_cmd->add_option("--tableau", lit, "tableau literal")->required();
  cls_cmd->add_flag("--members", members, "print every member");

  auto* rect_cmd = app.add_subcommand("rectify", "rectifications of a tableau");
  rect_cmd->add_option("--poset", poset, "poset spec")->required();
  rect_cmd->add_option("--tableau", lit, "tableau literal")->required();
  auto* all_flag = rect_cmd->add_flag("--all", all, "all rectifications");
  rect_cmd->add_flag("--greedy", greedy, "greedy rectification (default)")->excludes(all_flag);

  ShowArgs show;
  auto* show_cmd = app.add_subcommand("show", "render a tableau");
  show_cmd->add_option("--poset", show.poset, "poset spec");
  show_cmd->add_option("--tableau", show.tableau, "tableau literal");
  show_cmd->add_option("--minimal", show.minimal, "minimal tableau of this shape");
  show_cmd->add_option("--json-in", show.json_in, "tableau JSON ('-' reads standard input)");

  std::string wu, wv;
  bool weak = false;
  int slack = 3;
  auto* word_cmd = app.add_subcommand("word", "K-Knuth words");
  word_cmd->require_subcommand(1);
  auto* eq_cmd = word_cmd->add_subcommand("equiv", "bounded K-Knuth equivalence search");
  eq_cmd->add_option("u", wu, "first word, e.g. 1,3,2")->required();
  eq_cmd->add_option("v", wv, "second word")->required();
  eq_cmd->add_flag("--weak", weak, "weak K-Knuth equivalence");
  eq_cmd->add_option("--slack", slack, "allowed growth of intermediate words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }
  if (g.threads) set_threads(g.threads);

  try {
    if (*lr_cmd) return cmd_lr(g, lr);
    if (*urt_cmd) return cmd_urt(g, urt);
    if (*ver_cmd) return cmd_verify(g, only, list);
    if (*cls_cmd) return cmd_class(g, poset, lit, members);
    if (*rect_cmd) return cmd_rectify(g, poset, lit, all);
    if (*show_cmd) return cmd_show(g, show);
    if (*eq_cmd) return cmd_word_equiv(g, wu, wv, weak, slack);
  } catch (const RefusedPoset& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return Refused;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return Budget;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const std::runtime_error& e) {
    // ParseError, WindowExceeded and other input problems.
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
  return Ok;
}
