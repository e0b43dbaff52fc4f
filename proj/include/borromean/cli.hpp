#pragma once

// Command-line front end.  `run` parses arguments, dispatches, and returns
// the process exit status:
//   0 success, 1 user error, 2 search budget exceeded, 3 integrity failure.

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "borromean/diagram_io.hpp"
#include "borromean/errors.hpp"
#include "borromean/groupoid.hpp"
#include "borromean/homcount.hpp"
#include "borromean/sequences.hpp"
#include "borromean/tangle.hpp"
#include "borromean/wirtinger.hpp"

namespace borromean::cli {

enum ExitCode : int { ok = 0, user_error = 1, budget_error = 2, integrity_error = 3 };

// Whitespace-separated builtin names, concatenated innermost first.
inline AnnularDiagram parse_block_expression(const std::string& expr) {
  std::istringstream is(expr);
  std::string tok;
  std::optional<AnnularDiagram> acc;
  while (is >> tok) {
    auto next = builtin(tok);
    acc = acc ? concat(*acc, next) : next;
  }
  if (!acc) throw UsageError("empty block expression; valid labels: " + builtin_names_joined());
  return *acc;
}

namespace detail {

struct Styler {
  bool enabled = false;
  std::string verdict(bool v) const {
    const std::string word = v ? "true" : "false";
    if (!enabled) return word;
    return (v ? "\033[32m" : "\033[31m") + word + "\033[0m";
  }
};

inline Styler make_styler(std::ostream& out) {
  Styler s;
  s.enabled = &out == &std::cout && ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return s;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

inline nlohmann::json witness_json(const ConditionResult& c) {
  nlohmann::json j = {{"holds", c.holds}};
  if (c.witness) {
    j["shift"] = c.witness->shift;
    j["from"] = c.witness->from;
  }
  return j;
}

inline std::string witness_text(const std::optional<TailWitness>& w) {
  if (!w) return "";
  return "  (shift n=" + std::to_string(w->shift) + ", from i=" + std::to_string(w->from) + ")";
}

inline const char* involution_name(Involution op) {
  switch (op) {
    case Involution::bar: return "bar";
    case Involution::star: return "star";
    case Involution::barstar: return "barstar";
  }
  return "?";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block invariants of Borromean rays", "borromean"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  unsigned long long budget = SearchOptions{}.budget;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--threads", threads, "Worker threads for homomorphism searches")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);

  std::string expr, file;
  bool outer = false, simplify = false;
  auto* present = app.add_subcommand("present", "Print the Wirtinger presentation of a block");
  auto* present_src = present->add_option_group("source");
  present_src->add_option("--expr", expr, "Block expression, e.g. \"A As\"");
  present_src->add_option("--file", file, "Diagram JSON file");
  present_src->require_option(1);
  present->add_flag("--outer", outer, "Include the outer vertex relation");
  present->add_flag("--simplify", simplify, "Apply Tietze elimination");

  int sym = 0;
  std::string method = "enumerate";
  bool deep = false;
  std::string table;
  auto* homcount = app.add_subcommand("homcount", "Count homomorphism classes into Sym(n)");
  auto* hom_src = homcount->add_option_group("source");
  hom_src->add_option("--expr", expr, "Block expression over A, Ab, As, Abs, eps1..eps3, dirac");
  hom_src->add_option("--file", file, "Diagram JSON file");
  hom_src->add_option("--table", table, "Print a whole table: single (eps3, A) or pairs (A A, A Ab, A As, A Abs)")
      ->check(CLI::IsMember({"single", "pairs"}));
  hom_src->require_option(1);
  homcount->add_option("--sym", sym, "Symmetric group degree")->check(CLI::Range(1, SymmetricGroup::max_degree));
  homcount->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"enumerate", "burnside", "both"}));
  homcount->add_flag("--deep", deep, "Allow Sym(6) and larger");

  std::string emit = "table2";
  auto* groupoid = app.add_subcommand("groupoid", "Realized diffeomorphism types between blocks");
  groupoid->add_option("--emit", emit, "table2 or list")->check(CLI::IsMember({"table2", "list"}));

  std::string s1, s2, s;
  auto* classify = app.add_subcommand("classify", "Decide equivalence of two rays");
  classify->add_option("--s1", s1, "First sequence, e.g. \"pre: Ab ; per: A As\"")->required();
  classify->add_option("--s2", s2, "Second sequence")->required();

  auto* chiral = app.add_subcommand("achiral", "Decide whether a ray is achiral");
  chiral->add_option("--s", s, "Sequence, e.g. \"per: A As\"")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : user_error;
  }

  const auto styler = detail::make_styler(out);
  SearchOptions opt;
  opt.threads = threads;
  opt.budget = budget;

  try {
    auto load = [&]() -> std::pair<AnnularDiagram, std::string> {
      if (!file.empty()) return {load_diagram(file), file};
      return {parse_block_expression(expr), expr};
    };

    if (*present) {
      auto [diagram, label] = load();
      auto p = presentation(diagram, outer);
      if (simplify) p = tietze_simplify(p);
      if (json) {
        nlohmann::json j;
        j["block"] = label;
        j["generators"] = p.generators;
        j["relators"] = nlohmann::json::array();
        for (const auto& r : p.relators) j["relators"].push_back(word_string(p, r));
        out << j.dump() << '\n';
      } else {
        out << to_text(p);
      }
      return ok;
    }

    if (*homcount) {
      std::vector<std::pair<std::string, AnnularDiagram>> columns;
      std::vector<int> degrees;
      if (table == "single") {
        columns = {{"eps3", builtin("eps3")}, {"A", builtin("A")}};
      } else if (table == "pairs") {
        for (const char* b : {"A", "Ab", "As", "Abs"}) {
          columns.emplace_back(std::string("A ") + b, concat(builtin("A"), builtin(b)));
        }
      } else {
        auto [diagram, label] = load();
        columns.emplace_back(label, diagram);
      }
      if (!table.empty()) {
        const int top = sym ? sym : (deep ? 6 : 5);
        for (int n = 1; n <= top; ++n) degrees.push_back(n);
      } else {
        if (sym == 0) throw UsageError("--sym is required");
        degrees.push_back(sym);
      }
      for (int n : degrees) {
        if (n >= 6 && !deep) throw UsageError("Sym(" + std::to_string(n) + ") searches need --deep");
      }

      std::vector<CountMethod> methods;
      if (method == "enumerate" || method == "both") methods.push_back(CountMethod::enumerate);
      if (method == "burnside" || method == "both") methods.push_back(CountMethod::burnside);

      std::vector<FinitePresentation> simplified;
      for (const auto& [label, diagram] : columns) simplified.push_back(tietze_simplify(presentation(diagram)));

      if (!table.empty() && !json) {
        out << detail::pad("", 8);
        for (const auto& [label, diagram] : columns) out << "| " << detail::pad(label, 8);
        out << "|\n";
      } else if (!json) {
        out << detail::pad("group", 8) << "| " << detail::pad("block", 12) << "| " << detail::pad("method", 10)
            << "| " << detail::pad("homs", 12) << "| classes\n";
      }
      for (int n : degrees) {
        if (!table.empty() && !json) out << detail::pad("Sym(" + std::to_string(n) + ")", 8);
        for (std::size_t c = 0; c < columns.size(); ++c) {
          std::optional<HomClassCount> first;
          for (auto m : methods) {
            const auto r = count_classes(simplified[c], n, m, opt);
            if (first && (first->class_count != r.class_count || first->total_homs != r.total_homs)) {
              throw IntegrityError("enumeration and Burnside counts disagree for Sym(" + std::to_string(n) + ")");
            }
            if (json) {
              out << nlohmann::json{{"n", n},
                                    {"total", r.total_homs},
                                    {"classes", r.class_count},
                                    {"method", to_string(m)},
                                    {"block", columns[c].first}}
                         .dump()
                  << '\n';
            } else if (table.empty()) {
              out << detail::pad("Sym(" + std::to_string(n) + ")", 8) << "| " << detail::pad(columns[c].first, 12)
                  << "| " << detail::pad(to_string(m), 10) << "| " << detail::pad(std::to_string(r.total_homs), 12)
                  << "| " << r.class_count << '\n';
            }
            if (!first) first = r;
          }
          if (!table.empty() && !json) out << "| " << detail::pad(std::to_string(first->class_count), 8);
        }
        if (!table.empty() && !json) out << "|\n";
      }
      return ok;
    }

    if (*groupoid) {
      const auto realized = realized_closure();
      const auto excluded = excluded_closure(realized);
      if (realized.size() + excluded.size() != all_types().size()) {
        throw IntegrityError("realized and excluded types do not cover all " +
                             std::to_string(all_types().size()) + " types");
      }
      if (emit == "list") {
        if (json) {
          auto arr = nlohmann::json::array();
          for (const auto& t : realized) arr.push_back(to_string(t));
          out << nlohmann::json{{"realized", arr}, {"excluded_count", excluded.size()}}.dump() << '\n';
        } else {
          for (const auto& t : realized) out << to_string(t) << '\n';
        }
      } else if (json) {
        nlohmann::json cells = nlohmann::json::array();
        for (auto c : blocks::all) {
          for (int b : {1, -1}) {
            for (auto d : blocks::all) {
              for (int e : {1, -1}) {
                cells.push_back({{"domain", d.name()},
                                 {"orientation", e},
                                 {"codomain", c.name()},
                                 {"boundary", b},
                                 {"cell", cell_text(classify_cell(realized, d, c, e, b))}});
              }
            }
          }
        }
        out << nlohmann::json{{"realized", realized.size()}, {"excluded", excluded.size()}, {"cells", cells}}.dump()
            << '\n';
      } else {
        out << render_type_table(realized);
        out << "realized: " << realized.size() << "  excluded: " << excluded.size() << '\n';
      }
      return ok;
    }

    if (*classify) {
      const auto a = parse_sequence(s1);
      const auto b = parse_sequence(s2);
      const auto r = equivalence(a, b);
      if (json) {
        out << nlohmann::json{{"cond1", detail::witness_json(r.cond1)},
                              {"cond2", detail::witness_json(r.cond2)},
                              {"cond3", detail::witness_json(r.cond3)},
                              {"cond4", detail::witness_json(r.cond4)},
                              {"op_equivalent", r.op_equivalent},
                              {"or_equivalent", r.or_equivalent},
                              {"equivalent", r.equivalent}}
                   .dump()
            << '\n';
      } else {
        out << "s1: " << to_string(a) << '\n' << "s2: " << to_string(b) << '\n';
        const std::pair<const char*, const ConditionResult*> conds[] = {
            {"cond1 s1 ~ s2        ", &r.cond1},
            {"cond2 s1 ~ barstar s2", &r.cond2},
            {"cond3 s1 ~ bar s2    ", &r.cond3},
            {"cond4 s1 ~ star s2   ", &r.cond4}};
        for (const auto& [name, c] : conds) {
          out << name << ": " << styler.verdict(c->holds) << detail::witness_text(c->witness) << '\n';
        }
        out << "orientation-preserving equivalent: " << styler.verdict(r.op_equivalent) << '\n';
        out << "orientation-reversing equivalent: " << styler.verdict(r.or_equivalent) << '\n';
        out << "equivalent: " << styler.verdict(r.equivalent) << '\n';
      }
      return ok;
    }

    if (*chiral) {
      const auto seq = parse_sequence(s);
      const auto r = achiral(seq);
      const auto form = periodic_form_achiral_word(seq);
      if (r.achiral != form.has_value()) {
        throw IntegrityError("tail test and periodic-form test disagree on " + to_string(seq));
      }
      if (json) {
        nlohmann::json j = {{"achiral", r.achiral}};
        if (r.via) j["via"] = detail::involution_name(*r.via);
        if (r.witness) {
          j["shift"] = r.witness->shift;
          j["from"] = r.witness->from;
        }
        if (form) {
          j["C"] = word_string(form->first);
          j["form"] = form->second == Involution::bar ? "C bar(C)" : "C star(C)";
        }
        out << j.dump() << '\n';
      } else {
        out << "s: " << to_string(seq) << '\n';
        out << "achiral: " << styler.verdict(r.achiral) << '\n';
        if (r.via) out << "via: " << detail::involution_name(*r.via) << detail::witness_text(r.witness) << '\n';
        if (form) {
          out << "periodic form: (C " << (form->second == Involution::bar ? "bar(C)" : "star(C)")
              << ")^inf with C = " << word_string(form->first) << '\n';
        }
      }
      return ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return user_error;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return budget_error;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return integrity_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return integrity_error;
  }
  return user_error;
}

}  // namespace borromean::cli
