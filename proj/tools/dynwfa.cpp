// dynwfa: run dyn algorithms from the command line.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dynwfa/bench/bench.hpp>
#include <dynwfa/dyn/api.hpp>
#include <dynwfa/dyn/registry.hpp>
#include <dynwfa/instantiate/instantiate.hpp>

namespace dyn = dynwfa::dyn;
namespace inst = dynwfa::inst;

namespace
{
  struct options
  {
    std::string context = "lal_char(abc), b";
    std::vector<std::string> automata;
    std::string expr;
    std::string word;
    std::string algo = "auto";
    unsigned tape = 0;
    bool dot = false;
    std::string output;
    std::size_t iterations = 10000;
    std::vector<std::string> weights;
  };

  std::string slurp(const std::string& file)
  {
    if (file == "-")
      return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream is(file, std::ios::binary);
    if (!is)
      throw std::runtime_error("cannot open: " + file);
    return {std::istreambuf_iterator<char>(is), {}};
  }

  dyn::automaton load(const std::string& file)
  {
    return dyn::read_automaton(slurp(file));
  }

  dyn::automaton the_automaton(const options& o)
  {
    if (o.automata.size() != 1)
      throw std::invalid_argument("expected exactly one --automaton");
    return load(o.automata.front());
  }

  /// Where results go.
  class sink
  {
  public:
    explicit sink(const std::string& file)
    {
      if (!file.empty())
        {
          file_.open(file, std::ios::binary);
          if (!file_)
            throw std::runtime_error("cannot write: " + file);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
  };

  void emit(const options& o, const std::string& text)
  {
    sink s{o.output};
    s.out() << text;
    if (!text.empty() && text.back() != '\n')
      s.out() << '\n';
  }

  void emit(const options& o, const dyn::automaton& aut)
  {
    emit(o, dyn::to_string(aut, o.dot ? "dot" : "text"));
  }

  dyn::expression the_expression(const options& o)
  {
    if (o.expr.empty())
      throw std::invalid_argument("missing --expr");
    return dyn::make_expression(dyn::make_context(o.context), o.expr);
  }

  /// "z:2" -> (z, 2).
  dyn::weight parse_weight(const std::string& s)
  {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("invalid weight: " + s
                                  + " (expected WEIGHTSET:VALUE)");
    return dyn::make_weight(s.substr(0, colon), s.substr(colon + 1));
  }

  std::string fixed(double v, int prec = 1)
  {
    std::ostringstream o;
    o << std::fixed << std::setprecision(prec) << v;
    return o.str();
  }

  std::string dispatch_table(const dynwfa::bench::dispatch_report& r)
  {
    std::ostringstream o;
    o << "dispatch (is_proper), " << r.iterations
      << " iterations, best of 3, ns/call\n";
    auto row = [&](const char* name, double v) {
      o << "  " << std::left << std::setw(10) << name << std::right
        << std::setw(10) << fixed(v) << '\n';
    };
    row("empty", r.empty);
    row("static", r.static_call);
    row("virtual", r.virtual_call);
    row("dyn", r.dyn_call);
    o << "  dyn/virtual: " << fixed(r.dyn_call / r.virtual_call) << '\n';
    return o.str();
  }

  std::string pipeline_table(const dynwfa::bench::pipeline_report& r)
  {
    std::ostringstream o;
    o << "pipeline, " << r.iterations << " iterations, best of 5 interleaved runs, us/call\n"
      << "  " << std::left << std::setw(14) << "step" << std::right
      << std::setw(10) << "static" << std::setw(10) << "dyn" << '\n';
    for (const auto& s : r.steps)
      o << "  " << std::left << std::setw(14) << s.step << std::right
        << std::setw(10) << fixed(s.static_us, 2) << std::setw(10)
        << fixed(s.dyn_us, 2) << '\n';
    o << "  " << std::left << std::setw(14) << "total" << std::right
      << std::setw(10) << fixed(r.static_total(), 2) << std::setw(10)
      << fixed(r.dyn_total(), 2) << '\n'
      << "  result: " << r.dyn_expression << ", states: " << r.dyn_states
      << '\n';
    return o.str();
  }

  std::string registry_listing()
  {
    dyn::ensure_builtins();
    std::ostringstream o;
    for (const auto& name : dyn::registry_names())
      for (const auto& sig : dyn::get_registry(name).signatures())
        o << name << ": " << sig << '\n';
    return o.str();
  }
}

int main(int argc, char** argv)
{
  CLI::App app{"Weighted automata through the dyn layer"};
  app.require_subcommand(0, 1);
  options o;
  bool verbose = false;
  bool list = false;
  app.add_flag("--verbose", verbose, "Log plugin compilations to stderr");
  app.add_flag("--list", list, "List the registered (algorithm, signature) pairs");

  auto add_ctx = [&](CLI::App* c) {
    c->add_option("--context", o.context, "Context spec")
      ->capture_default_str();
  };
  auto add_aut = [&](CLI::App* c, bool required = true) {
    auto opt = c->add_option("--automaton", o.automata,
                             "Automaton file ('-' for stdin)");
    if (required)
      opt->required();
  };
  auto add_out = [&](CLI::App* c, bool dot = true) {
    c->add_option("--output", o.output, "Output file");
    if (dot)
      c->add_flag("--dot", o.dot, "Print automata in DOT");
  };
  auto add_expr = [&](CLI::App* c) {
    add_ctx(c);
    c->add_option("--expr", o.expr, "Expression")->required();
  };

  auto* context = app.add_subcommand("context", "Print a context");
  add_ctx(context);
  add_out(context, false);

  auto* expression = app.add_subcommand("expression", "Parse and print an expression");
  add_expr(expression);
  add_out(expression, false);

  auto* evaluate = app.add_subcommand("evaluate", "Weight of a word");
  add_aut(evaluate);
  evaluate->add_option("--word", o.word, "Word");
  add_out(evaluate, false);

  auto* is_proper = app.add_subcommand("is-proper", "Whether an automaton has no spontaneous transitions");
  add_aut(is_proper);
  add_out(is_proper, false);

  auto* thompson = app.add_subcommand("thompson", "Thompson automaton of an expression");
  add_expr(thompson);
  add_out(thompson);

  struct unary
  {
    const char* name;
    const char* help;
    dyn::automaton (*fn)(const dyn::automaton&);
  };
  static const unary unaries[] = {
    {"proper", "Remove spontaneous transitions", dyn::proper},
    {"determinize", "Weighted subset construction", dyn::determinize},
    {"strip", "Drop decorations", dyn::strip},
  };
  std::vector<std::pair<CLI::App*, const unary*>> unary_cmds;
  for (const auto& u : unaries)
    {
      auto* c = app.add_subcommand(u.name, u.help);
      add_aut(c);
      add_out(c);
      unary_cmds.emplace_back(c, &u);
    }

  auto* minimize = app.add_subcommand("minimize", "Minimal deterministic automaton");
  add_aut(minimize);
  minimize->add_option("--algo", o.algo, "moore, signature, brzozowski or auto")
    ->capture_default_str();
  add_out(minimize);

  auto* product = app.add_subcommand("product", "Product of automata (repeat --automaton)");
  add_aut(product);
  add_out(product);

  auto* union_ = app.add_subcommand("union", "Union of two automata");
  add_aut(union_);
  add_out(union_);

  auto* focus = app.add_subcommand("focus", "View a transducer as an automaton on one tape");
  add_aut(focus);
  focus->add_option("--tape", o.tape, "Tape index")->required();
  add_out(focus);

  auto* to_expression = app.add_subcommand("to-expression", "Expression of an automaton");
  add_aut(to_expression);
  add_out(to_expression, false);

  auto* add_weights = app.add_subcommand("add-weights", "Sum of weights in the join of their weightsets");
  add_weights->add_option("weights", o.weights, "WEIGHTSET:VALUE")
    ->required()
    ->expected(2);
  add_out(add_weights, false);

  auto* pipeline = app.add_subcommand("pipeline", "thompson, proper, determinize, minimize, to-expression");
  add_ctx(pipeline);
  pipeline->add_option("--expr", o.expr, "Expression")->required();
  add_out(pipeline, false);

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  std::string bench_kind;
  bench->add_option("kind", bench_kind, "dispatch or pipeline")
    ->required()
    ->check(CLI::IsMember({"dispatch", "pipeline"}));
  bench->add_option("--iterations", o.iterations, "Iterations per run")
    ->capture_default_str()
    ->check(CLI::Range(std::size_t(10000), std::size_t(1) << 40));
  bench->add_option("--expr", o.expr, "Pipeline expression");
  add_out(bench, false);

  auto* cache = app.add_subcommand("cache", "Manage the plugin cache");
  std::string cache_action;
  cache->add_option("action", cache_action, "clear or stats")
    ->required()
    ->check(CLI::IsMember({"clear", "stats"}));

  auto* registry = app.add_subcommand("registry", "Inspect the registries");
  std::string registry_action;
  registry->add_option("action", registry_action, "list")
    ->required()
    ->check(CLI::IsMember({"list"}));

  CLI11_PARSE(app, argc, argv);

  try
    {
      if (verbose)
        inst::set_verbose(true);

      if (list || registry->parsed())
        emit(o, registry_listing());
      else if (context->parsed())
        emit(o, dyn::to_string(dyn::make_context(o.context)));
      else if (expression->parsed())
        emit(o, dyn::to_string(the_expression(o)));
      else if (evaluate->parsed())
        emit(o, dyn::to_string(dyn::evaluate(the_automaton(o), o.word)));
      else if (is_proper->parsed())
        emit(o, dyn::is_proper(the_automaton(o)) ? "true" : "false");
      else if (thompson->parsed())
        emit(o, dyn::thompson(the_expression(o)));
      else if (minimize->parsed())
        emit(o, dyn::minimize(the_automaton(o), o.algo));
      else if (product->parsed())
        {
          std::vector<dyn::automaton> auts;
          for (const auto& f : o.automata)
            auts.push_back(load(f));
          emit(o, dyn::product(auts));
        }
      else if (union_->parsed())
        {
          if (o.automata.size() != 2)
            throw std::invalid_argument("union: expected two --automaton");
          emit(o, dyn::union_(load(o.automata[0]), load(o.automata[1])));
        }
      else if (focus->parsed())
        emit(o, dyn::focus(the_automaton(o), o.tape));
      else if (to_expression->parsed())
        emit(o, dyn::to_string(dyn::to_expression(the_automaton(o))));
      else if (add_weights->parsed())
        emit(o, dyn::to_string(dyn::add_weights(parse_weight(o.weights[0]),
                                                parse_weight(o.weights[1]))));
      else if (pipeline->parsed())
        {
          auto aut = dyn::minimize(
            dyn::determinize(dyn::proper(dyn::thompson(the_expression(o)))),
            "auto");
          emit(o, dyn::to_string(dyn::to_expression(aut)) + "\nstates: "
                    + std::to_string(dyn::num_states(aut)));
        }
      else if (bench->parsed())
        {
          if (bench_kind == "dispatch")
            emit(o, dispatch_table(dynwfa::bench::run_dispatch(o.iterations)));
          else
            emit(o, pipeline_table(dynwfa::bench::run_pipeline(
                      o.iterations, o.expr.empty() ? "[abc]*[abc]*" : o.expr)));
        }
      else if (cache->parsed())
        {
          if (cache_action == "clear")
            {
              inst::clear_cache();
              std::cout << "cleared " << inst::plugin_root().string() << '\n';
            }
          else
            {
              auto s = inst::stats();
              std::cout << "root: " << inst::plugin_root().string() << '\n'
                        << "sources: " << s.sources << '\n'
                        << "libraries: " << s.libraries << '\n'
                        << "logs: " << s.logs << '\n'
                        << "bytes: " << s.bytes << '\n';
            }
        }
      else
        {
          bool done = false;
          for (const auto& [c, u] : unary_cmds)
            if (c->parsed())
              {
                emit(o, u->fn(the_automaton(o)));
                done = true;
              }
          if (!done)
            {
              std::cerr << app.help();
              return 2;
            }
        }
    }
  catch (const std::exception& e)
    {
      std::string msg = e.what();
      std::cerr << msg;
      if (msg.empty() || msg.back() != '\n')
        std::cerr << '\n';
      return 1;
    }
  return 0;
}
