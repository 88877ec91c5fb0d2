#include <dynwfa/bench/bench.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <numeric>
#include <memory>

#include <dynwfa/algorithms/determinize.hpp>
#include <dynwfa/algorithms/is_proper.hpp>
#include <dynwfa/algorithms/minimize.hpp>
#include <dynwfa/algorithms/proper.hpp>
#include <dynwfa/algorithms/thompson.hpp>
#include <dynwfa/algorithms/to_expression.hpp>
#include <dynwfa/algebra/type_spec.hpp>
#include <dynwfa/automata/io.hpp>
#include <dynwfa/dyn/api.hpp>
#include <dynwfa/dyn/builtins.hpp>

namespace dynwfa::bench
{
  namespace
  {
    using clock = std::chrono::steady_clock;
    using ctx_t = dyn::builtin::lal_char_b;

    /// Make \a v look used and modified to the optimizer.
    template <typename T>
    inline void keep(T& v)
    {
      asm volatile("" : "+r"(v) : : "memory");
    }

    double ns_since(clock::time_point start)
    {
      return std::chrono::duration<double, std::nano>(clock::now() - start)
        .count();
    }

    template <typename Fun>
    double best_ns_per_call(std::size_t n, unsigned runs, Fun fun)
    {
      double res = std::numeric_limits<double>::infinity();
      for (unsigned r = 0; r < runs; ++r)
        {
          auto start = clock::now();
          for (std::size_t i = 0; i < n; ++i)
            fun(i);
          res = std::min(res, ns_since(start) / double(n));
        }
      return res;
    }

    struct checker
    {
      virtual ~checker() = default;
      virtual bool is_proper() const = 0;
    };

    template <typename Aut>
    struct checker_impl final : checker
    {
      explicit checker_impl(const Aut& a) : aut(a) {}
      [[gnu::noinline]] bool is_proper() const override
      {
        return dynwfa::is_proper(aut);
      }
      const Aut& aut;
    };

    const char* sample_automaton = R"(context = lal_char(ab), b
$ -> 0
0 -> 0 a, b
0 -> 1 b
1 -> 1 a, b
1 -> $
)";
  }

  dispatch_report run_dispatch(std::size_t n, unsigned runs)
  {
    auto [spec, body] = split_automaton_header(sample_automaton);
    auto ctx = ctx_t::make(parse_context_spec(spec).vname());
    auto aut = read_automaton(ctx, body);
    auto daut = dyn::read_automaton(sample_automaton);

    dispatch_report res;
    res.iterations = n;
    res.empty = best_ns_per_call(n, runs, [](std::size_t i) { keep(i); });
    res.static_call = best_ns_per_call(n, runs, [&](std::size_t) {
        bool b = dynwfa::is_proper(aut);
        keep(b);
      });
    std::unique_ptr<checker> c
      = std::make_unique<checker_impl<decltype(aut)>>(aut);
    checker* p = c.get();
    res.virtual_call = best_ns_per_call(n, runs, [&](std::size_t) {
        keep(p);
        bool b = p->is_proper();
        keep(b);
      });
    res.dyn_call = best_ns_per_call(n, runs, [&](std::size_t) {
        bool b = dyn::is_proper(daut);
        keep(b);
      });
    return res;
  }

  double pipeline_report::static_total() const
  {
    double res = 0;
    for (const auto& s : steps)
      res += s.static_us;
    return res;
  }

  double pipeline_report::dyn_total() const
  {
    double res = 0;
    for (const auto& s : steps)
      res += s.dyn_us;
    return res;
  }

  pipeline_report run_pipeline(std::size_t n, const std::string& expr,
                               unsigned runs)
  {
    static const char* names[]
      = {"thompson", "proper", "determinize", "minimize", "to_expression"};
    constexpr std::size_t num_steps = 5;
    using times_t = std::array<double, num_steps>;

    pipeline_report res;
    res.iterations = n;

    // Static core.
    auto ctx = ctx_t::make(parse_context_spec("lal_char(abc), b").vname());
    expressionset<ctx_t> es{ctx};
    auto e = es.parse(expr);
    auto static_run = [&](times_t& t) {
      auto t0 = clock::now();
      auto th = thompson(es, e);
      auto t1 = clock::now();
      auto pr = std::make_shared<const mutable_automaton<ctx_t>>(proper(th));
      auto t2 = clock::now();
      auto de = std::make_shared<const origin_automaton<ctx_t>>(
        determinize(pr));
      auto t3 = clock::now();
      auto mi = std::make_shared<const origin_automaton<ctx_t>>(
        minimize(de, "auto"));
      auto t4 = clock::now();
      auto ex = to_expression(*mi);
      auto t5 = clock::now();
      clock::time_point ts[] = {t0, t1, t2, t3, t4, t5};
      for (std::size_t i = 0; i < num_steps; ++i)
        t[i] += std::chrono::duration<double, std::micro>(ts[i + 1] - ts[i])
                  .count();
      res.static_states = mi->num_states();
      res.static_expression = es.to_string(ex);
    };

    // Dyn API.
    auto dctx = dyn::make_context("lal_char(abc), b");
    auto de = dyn::make_expression(dctx, expr);
    auto dyn_run = [&](times_t& t) {
      auto t0 = clock::now();
      auto th = dyn::thompson(de);
      auto t1 = clock::now();
      auto pr = dyn::proper(th);
      auto t2 = clock::now();
      auto det = dyn::determinize(pr);
      auto t3 = clock::now();
      auto mi = dyn::minimize(det, "auto");
      auto t4 = clock::now();
      auto ex = dyn::to_expression(mi);
      auto t5 = clock::now();
      clock::time_point ts[] = {t0, t1, t2, t3, t4, t5};
      for (std::size_t i = 0; i < num_steps; ++i)
        t[i] += std::chrono::duration<double, std::micro>(ts[i + 1] - ts[i])
                  .count();
      res.dyn_states = dyn::num_states(mi);
      res.dyn_expression = dyn::to_string(ex);
    };

    // Runs alternate between the two sides so that drift in machine load
    // hits both alike; each side keeps its best run.
    auto one_run = [&](auto run) {
      times_t t{};
      for (std::size_t i = 0; i < n; ++i)
        run(t);
      for (auto& x : t)
        x /= double(n);
      return t;
    };
    auto total_of = [](const times_t& t) {
      return std::accumulate(t.begin(), t.end(), 0.0);
    };

    // Warm up both (first dyn calls may fill caches).
    times_t scratch{};
    static_run(scratch);
    dyn_run(scratch);
    times_t st{}, dt{};
    double st_best = std::numeric_limits<double>::infinity();
    double dt_best = st_best;
    for (unsigned r = 0; r < runs; ++r)
      {
        auto s = one_run(static_run);
        if (total_of(s) < st_best)
          st_best = total_of(st = s);
        auto d = one_run(dyn_run);
        if (total_of(d) < dt_best)
          dt_best = total_of(dt = d);
      }
    for (std::size_t i = 0; i < num_steps; ++i)
      res.steps.push_back({names[i], st[i], dt[i]});
    return res;
  }
}
