#include "braidwalk/cli.hpp"

#include "braidwalk/acceptance.hpp"
#include "braidwalk/braid.hpp"
#include "braidwalk/cayley.hpp"
#include "braidwalk/degree_table.hpp"
#include "braidwalk/format.hpp"
#include "braidwalk/group_spec_json.hpp"
#include "braidwalk/ldp.hpp"
#include "braidwalk/limits.hpp"
#include "braidwalk/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace braidwalk::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string output;
  std::string format = "csv";
  std::string seed = "0x5EEDC0FFEE152024";
  unsigned threads = 0;
};

/// What a command produced: the text printed in csv mode and the document
/// printed in json mode.
struct Result {
  std::string text;
  json doc;
  int exit_code = kSuccess;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw InvalidSpec("malformed seed '" + text + "'");
  }
  if (used != text.size()) throw InvalidSpec("malformed seed '" + text + "'");
  return value;
}

/// Reals in JSON: rounded to 12 significant digits; infinities as strings.
json real_json(long double value) {
  if (!std::isfinite(value)) return format_real(value);
  return std::stod(format_real(value));
}

json limit_json(const LimitValue& v) {
  json doc = {{"kind", v.coincides() ? "single" : "parity_split"}, {"even", to_string(v.even)}, {"odd", to_string(v.odd)}};
  if (v.coincides()) doc["value"] = to_string(v.even);
  return doc;
}

Result limit_result(const LimitValue& v) { return {v.to_string() + "\n", limit_json(v)}; }

GroupSpec read_group(const std::string& inline_json, const std::string& file) {
  if (!inline_json.empty() && !file.empty()) throw InvalidSpec("give either --group or --group-file, not both");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidSpec("cannot read group file '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_group_spec(buffer.str());
  }
  if (inline_json.empty()) throw InvalidSpec("a group is required (--group or --group-file)");
  return parse_group_spec(inline_json);
}

Element parse_element(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception&) {
    throw InvalidSpec("element must be a JSON integer array, got '" + text + "'");
  }
  if (!doc.is_array()) throw InvalidSpec("element must be a JSON integer array");
  Element::Storage code;
  for (const auto& v : doc) {
    if (!v.is_number_integer()) throw InvalidSpec("element entries must be integers");
    code.push_back(v.get<std::int32_t>());
  }
  return Element(std::move(code));
}

json word_json(const BraidWord& word) {
  json letters = json::array();
  for (const auto& l : word.letters) letters.push_back(l.sign * l.index);
  return {{"strands", word.strands}, {"word", letters}};
}

Result word_result(const BraidWord& word) { return {format_braid_letters(word) + "\n", word_json(word)}; }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_field(cells[i]);
  return line + "\n";
}

// ---------------------------------------------------------------------------

void add_limits(CLI::App& app, std::function<Result()>& action) {
  auto* limits = app.add_subcommand("limits", "Closed-form limiting expectations");
  limits->require_subcommand(1);

  auto* cyclic = limits->add_subcommand("cyclic", "Z_m with one generator");
  auto m = std::make_shared<int>(0);
  cyclic->add_option("--m", *m, "Modulus m >= 2")->required();
  cyclic->callback([&action, m] { action = [m] { return limit_result(cyclic_limit(*m)); }; });

  auto* product = limits->add_subcommand("cyclic-product", "Z_{n_1} x ... x Z_{n_k}");
  auto moduli = std::make_shared<std::vector<int>>();
  product->add_option("--moduli", *moduli, "Comma-separated moduli, at least two, each > 1")->required()->delimiter(',');
  product->callback([&action, moduli] {
    action = [moduli] {
      const Rational v = cyclic_product_limit(*moduli);
      return Result{to_string(v) + "\n", limit_json(LimitValue::single(v))};
    };
  });

  auto* coxeter = limits->add_subcommand("coxeter", "Finite Coxeter groups from their degrees");
  auto type = std::make_shared<std::string>();
  coxeter->add_option("--type", *type, "Type such as B3, H4, I2(5) or a product A1xB3")->required();
  coxeter->callback([&action, type] {
    action = [type] {
      const auto product = parse_coxeter_product(*type);
      return limit_result(product.size() == 1 ? coxeter_limit(product.front()) : coxeter_limit(product));
    };
  });

  auto* components = limits->add_subcommand("components", "Closure components of lifted walks on S_n");
  auto n = std::make_shared<int>(0);
  components->add_option("--n", *n, "Strand count n >= 2")->required();
  components->callback([&action, n] {
    action = [n] {
      const ComponentLimits c = component_limits(*n);
      return limit_result(LimitValue::parity_split(c.even_steps, c.odd_steps));
    };
  });
}

void add_walk(CLI::App& app, std::function<Result()>& action, const Globals& globals) {
  struct Params {
    std::string group;
    std::string group_file;
    std::int64_t steps = 200;
    std::uint64_t trials = 100'000;
    std::string hold = "0";
    std::vector<std::string> weights;
  };
  auto p = std::make_shared<Params>();
  auto* walk = app.add_subcommand("walk", "Monte Carlo walk against the exact limit");
  walk->add_option("--group", p->group, "Group spec as JSON");
  walk->add_option("--group-file", p->group_file, "File holding the group spec JSON");
  walk->add_option("--steps", p->steps, "Walk length N; rows are reported at N-1, N, N+1")->check(CLI::NonNegativeNumber);
  walk->add_option("--trials", p->trials, "Independent trajectories")->check(CLI::PositiveNumber);
  walk->add_option("--hold", p->hold, "Holding probability, exact (e.g. 1/5)");
  walk->add_option("--weights", p->weights, "Per-generator weights, shared by a letter and its inverse")->delimiter(',');
  walk->callback([&action, &globals, p] {
    action = [&globals, p] {
      const GroupSpec spec = read_group(p->group, p->group_file);
      const CayleyGraph graph = build_cayley(spec);
      const Rational hold = parse_rational(p->hold);
      StepDistribution dist;
      if (p->weights.empty()) {
        dist = uniform_step_distribution(graph.group(), hold);
      } else {
        std::vector<Rational> weights;
        for (const auto& w : p->weights) weights.push_back(parse_rational(w));
        dist = weighted_step_distribution(graph.group(), weights, hold);
      }
      const EmpiricalReport report = empirical_vs_limit(graph, presentation_of(spec), dist, Functional::length(), p->steps,
                                                        p->trials, parse_seed(globals.seed), globals.threads);
      Result result;
      result.text = csv_line({"step", "parity", "empirical_mean", "exact_limit", "tv_distance", "standard_error", "exact_tv"});
      json rows = json::array();
      for (const auto& row : report.rows) {
        const std::string exact_tv = row.exact_tv < 0 ? "" : format_real(row.exact_tv);
        result.text += csv_line({std::to_string(row.step), row.parity, format_real(row.empirical_mean),
                                 to_string(row.exact_limit), format_real(row.tv_distance),
                                 format_real(row.standard_error), exact_tv});
        json r = {{"step", row.step},
                  {"parity", row.parity},
                  {"empirical_mean", real_json(row.empirical_mean)},
                  {"exact_limit", to_string(row.exact_limit)},
                  {"tv_distance", real_json(row.tv_distance)},
                  {"standard_error", real_json(row.standard_error)}};
        r["exact_tv"] = row.exact_tv < 0 ? json(nullptr) : real_json(row.exact_tv);
        rows.push_back(std::move(r));
      }
      result.doc = {{"group", json::parse(group_spec_to_json(spec))},
                    {"order", graph.size()},
                    {"trials", report.trials},
                    {"seed", report.seed},
                    {"hold", to_string(dist.hold)},
                    {"rows", rows}};
      return result;
    };
  });
}

void add_graph(CLI::App& app, std::function<Result()>& action) {
  auto group = std::make_shared<std::pair<std::string, std::string>>();
  auto* graph_cmd = app.add_subcommand("graph", "Dump the Cayley graph as an edge list with BFS distances");
  graph_cmd->add_option("--group", group->first, "Group spec as JSON");
  graph_cmd->add_option("--group-file", group->second, "File holding the group spec JSON");
  graph_cmd->callback([&action, group] {
    action = [group] {
      const CayleyGraph graph = build_cayley(read_group(group->first, group->second));
      std::ostringstream text;
      write_edge_list(text, graph);
      json edges = json::array();
      for (std::size_t v = 0; v < graph.size(); ++v) {
        for (std::size_t k = 0; k < graph.letter_count(); ++k) {
          edges.push_back({v, graph.neighbor(v, k), graph.letters()[k].generator + 1, graph.letters()[k].sign});
        }
      }
      json distances(std::vector<int>(graph.distances().begin(), graph.distances().end()));
      return Result{text.str(), {{"edges", edges}, {"distances", distances}, {"bipartite", graph.bipartite()}}};
    };
  });
}

void add_braid(CLI::App& app, std::function<Result()>& action) {
  auto* braid = app.add_subcommand("braid", "Braid words: lifts, closures, composition");
  braid->require_subcommand(1);

  struct LiftParams {
    std::string group;
    std::string group_file;
    std::string element;
    std::int64_t vertex = -1;
    bool all = false;
  };
  auto lp = std::make_shared<LiftParams>();
  auto* lift = braid->add_subcommand("lift", "Positive lift of the lexicographically smallest reduced word");
  lift->add_option("--group", lp->group, "Coxeter group spec as JSON");
  lift->add_option("--group-file", lp->group_file, "File holding the group spec JSON");
  auto* element_opt = lift->add_option("--element", lp->element, "Element code as a JSON array, e.g. [3, 2, 1]");
  auto* vertex_opt = lift->add_option("--vertex", lp->vertex, "Vertex index in BFS order");
  auto* all_opt = lift->add_flag("--all", lp->all, "Every element, as a table");
  element_opt->excludes(vertex_opt)->excludes(all_opt);
  vertex_opt->excludes(all_opt);
  lift->callback([&action, lp] {
    action = [lp] {
      const GroupSpec spec = read_group(lp->group, lp->group_file);
      if (!spec.is_coxeter()) throw InvalidSpec("lifts need a Coxeter group");
      const CayleyGraph graph = build_cayley(spec);
      if (lp->all) {
        Result result;
        result.text = csv_line({"vertex", "element", "length", "braid", "components"});
        result.doc = json::array();
        for (std::size_t v = 0; v < graph.size(); ++v) {
          const BraidWord w = lift_to_braid(graph, v);
          const int components = closure_components(w);
          result.text += csv_line({std::to_string(v), to_string(graph.element(v)), std::to_string(graph.distance(v)),
                                   format_braid_letters(w), std::to_string(components)});
          json row = word_json(w);
          row["vertex"] = v;
          row["element"] = std::vector<std::int32_t>(graph.element(v).code().begin(), graph.element(v).code().end());
          row["length"] = graph.distance(v);
          row["components"] = components;
          result.doc.push_back(std::move(row));
        }
        return result;
      }
      std::size_t vertex = 0;
      if (!lp->element.empty()) {
        vertex = graph.index_of(parse_element(lp->element));
      } else if (lp->vertex >= 0) {
        if (static_cast<std::size_t>(lp->vertex) >= graph.size()) throw InvalidSpec("vertex out of range");
        vertex = static_cast<std::size_t>(lp->vertex);
      } else {
        throw InvalidSpec("give --element, --vertex or --all");
      }
      return word_result(lift_to_braid(graph, vertex));
    };
  });

  struct WordParams {
    std::string word;
    int strands = 0;
  };
  auto wp = std::make_shared<WordParams>();
  auto* closure = braid->add_subcommand("closure", "Link components of the closure");
  closure->add_option("--word", wp->word, "Signed integer list, e.g. [1, -2]")->required();
  closure->add_option("--strands", wp->strands, "Strand count")->required();
  closure->callback([&action, wp] {
    action = [wp] {
      const int c = closure_components(parse_braid_word(wp->word, wp->strands));
      return Result{std::to_string(c) + "\n", {{"components", c}}};
    };
  });

  auto rp = std::make_shared<WordParams>();
  auto* reduce = braid->add_subcommand("reduce", "Cancel adjacent inverse pairs");
  reduce->add_option("--word", rp->word, "Signed integer list")->required();
  reduce->add_option("--strands", rp->strands, "Strand count")->required();
  reduce->callback([&action, rp] {
    action = [rp] { return word_result(free_reduce(parse_braid_word(rp->word, rp->strands))); };
  });

  auto words = std::make_shared<std::vector<std::string>>();
  auto strands = std::make_shared<std::vector<int>>();
  auto* compose = braid->add_subcommand("compose", "Block-diagonal composition; pair each --word with a --strands");
  compose->add_option("--word", *words, "Signed integer list (repeatable)")->required()->allow_extra_args(false);
  compose->add_option("--strands", *strands, "Strand count of the matching --word (repeatable)")
      ->required()
      ->allow_extra_args(false);
  compose->callback([&action, words, strands] {
    action = [words, strands] {
      if (words->size() != strands->size()) throw InvalidSpec("each --word needs a matching --strands");
      std::vector<BraidWord> parts;
      for (std::size_t i = 0; i < words->size(); ++i) parts.push_back(parse_braid_word((*words)[i], (*strands)[i]));
      return word_result(block_diagonal_compose(parts));
    };
  });
}

void add_ldp(CLI::App& app, std::function<Result()>& action, const Globals& globals) {
  auto* ldp = app.add_subcommand("ldp", "Restricted compositions and the rate function");
  ldp->require_subcommand(1);

  auto kp = std::make_shared<std::array<long long, 3>>();
  auto* kappa = ldp->add_subcommand("kappa", "Ordered k-tuples in [0, j) summing to n");
  kappa->add_option("--n", (*kp)[0], "Target sum")->required();
  kappa->add_option("--j", (*kp)[1], "Exclusive upper bound of each entry")->required();
  kappa->add_option("--k", (*kp)[2], "Tuple length")->required();
  kappa->callback([&action, kp] {
    action = [kp] {
      const BigInt v = kappa_exact((*kp)[0], (*kp)[1], (*kp)[2]);
      return Result{to_string(v) + "\n", {{"kappa", to_string(v)}}};
    };
  });

  struct RateParams {
    int n = 0;
    std::string x;
    std::vector<long long> Ns;
    long long N = 0;
    long long target = 0;
  };
  auto rp = std::make_shared<RateParams>();
  auto* rate = ldp->add_subcommand("rate", "Rate function I(x)");
  rate->add_option("--n", rp->n, "S_n parameter, n >= 3")->required();
  rate->add_option("--x", rp->x, "Point x, exact (e.g. 3/2)")->required();
  rate->callback([&action, rp] {
    action = [rp] {
      const long double v = rate_function(parse_rational(rp->x), rp->n);
      return Result{format_real(v) + "\n", {{"I_x", real_json(v)}}};
    };
  });

  auto pp = std::make_shared<RateParams>();
  auto* prob = ldp->add_subcommand("prob", "Pr(L_N = target) under both models");
  prob->add_option("--n", pp->n, "S_n parameter")->required();
  prob->add_option("--N", pp->N, "Number of blocks")->required();
  prob->add_option("--target", pp->target, "Even total length")->required();
  prob->callback([&action, pp] {
    action = [pp] {
      Result result;
      result.text = csv_line({"model", "probability", "log_prob"});
      result.doc = json::array();
      for (auto model : {ProbabilityModel::Composition, ProbabilityModel::TrueLength}) {
        const Rational p = exact_probability(model, pp->N, pp->target, pp->n);
        const long double lp = p == 0 ? -std::numeric_limits<long double>::infinity() : log_of(p);
        result.text += csv_line({to_string(model), to_string(p), format_real(lp)});
        result.doc.push_back({{"model", to_string(model)}, {"probability", to_string(p)}, {"log_prob", real_json(lp)}});
      }
      return result;
    };
  });

  auto rep = std::make_shared<RateParams>();
  auto* report = ldp->add_subcommand("report", "-log Pr(L_N = 2Nx)/N for several N under both models");
  report->add_option("--n", rep->n, "S_n parameter, n >= 3")->required();
  report->add_option("--x", rep->x, "Point x, exact; N x must be an integer")->required();
  report->add_option("--N", rep->Ns, "Comma-separated block counts")->required()->delimiter(',');
  report->callback([&action, &globals, rep] {
    action = [&globals, rep] {
      const auto rows = rate_convergence_report(rep->n, parse_rational(rep->x), rep->Ns, globals.threads);
      Result result;
      result.text = csv_line({"n", "N", "x", "model", "log_prob", "neg_log_prob_over_N", "I_x", "kappa_asymptotic_log",
                              "delta_previous"});
      result.doc = json::array();
      for (const RateRow& row : rows) {
        const std::string asymptotic = row.kappa_asymptotic_log ? format_real(*row.kappa_asymptotic_log) : "";
        const std::string delta = row.delta_previous ? format_real(*row.delta_previous) : "";
        result.text += csv_line({std::to_string(row.n), std::to_string(row.N), to_string(row.x), to_string(row.model),
                                 format_real(row.log_prob), format_real(row.neg_log_prob_over_N), format_real(row.rate),
                                 asymptotic, delta});
        json r = {{"n", row.n},
                  {"N", row.N},
                  {"x", to_string(row.x)},
                  {"model", to_string(row.model)},
                  {"log_prob", real_json(row.log_prob)},
                  {"neg_log_prob_over_N", real_json(row.neg_log_prob_over_N)},
                  {"I_x", real_json(row.rate)}};
        r["kappa_asymptotic_log"] = row.kappa_asymptotic_log ? real_json(*row.kappa_asymptotic_log) : json(nullptr);
        r["delta_previous"] = row.delta_previous ? real_json(*row.delta_previous) : json(nullptr);
        result.doc.push_back(std::move(r));
      }
      return result;
    };
  });
}

void add_verify(CLI::App& app, std::function<Result()>& action, const Globals& globals) {
  auto ids = std::make_shared<std::vector<int>>();
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria against the brute-force oracles");
  verify->add_option("--criterion", *ids, "Comma-separated criterion ids (default: all)")->delimiter(',');
  verify->callback([&action, &globals, ids] {
    action = [&globals, ids] {
      acceptance::Options options;
      options.threads = globals.threads;
      options.seed = parse_seed(globals.seed);
      std::vector<int> selected = *ids;
      if (selected.empty())
        for (const auto& info : acceptance::criteria()) selected.push_back(info.id);
      for (int id : selected) {
        const auto& all = acceptance::criteria();
        if (std::none_of(all.begin(), all.end(), [id](const auto& c) { return c.id == id; }))
          throw InvalidSpec("no acceptance criterion " + std::to_string(id));
      }

      Result result;
      result.doc = json::array();
      int failed = 0;
      for (int id : selected) {
        const auto r = acceptance::run_criterion(id, options);
        failed += !r.passed;
        result.text += acceptance::format_result(r) + "\n";
        result.doc.push_back({{"id", r.info.id},
                              {"title", r.info.title},
                              {"passed", r.passed},
                              {"seconds", real_json(r.seconds)},
                              {"budget_seconds", r.info.budget_seconds},
                              {"detail", r.detail}});
      }
      result.text += failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n";
      result.exit_code = failed == 0 ? kSuccess : kVerificationFailed;
      return result;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  std::function<Result()> action;

  CLI::App app("Random walks on Cayley graphs, braid lifts and large deviations", "braidwalk");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--output", globals.output, "Write results to this file instead of standard output");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", globals.seed, "Master seed (decimal or 0x hex)");
  app.add_option("--threads", globals.threads, "Worker threads (0 = all cores)");

  add_limits(app, action);
  add_walk(app, action, globals);
  add_graph(app, action);
  add_braid(app, action);
  add_ldp(app, action, globals);
  add_verify(app, action, globals);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Result result;
  try {
    parse_seed(globals.seed);
    result = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  const std::string rendered = globals.format == "json" ? result.doc.dump(2) + "\n" : result.text;
  if (globals.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(globals.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << globals.output << "'\n";
      return kUsageError;
    }
    file << rendered;
  }
  return result.exit_code;
}

}  // namespace braidwalk::cli
