// One PASS/FAIL line per acceptance criterion.  Tolerances are the
// constants below; the exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include <dynwfa/algebra/join.hpp>
#include <dynwfa/algebra/type_spec.hpp>
#include <dynwfa/algorithms/sum_weight.hpp>
#include <dynwfa/automata/io.hpp>
#include <dynwfa/bench/bench.hpp>
#include <dynwfa/dyn/api.hpp>
#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/dyn/register_context.hpp>
#include <dynwfa/dyn/registry.hpp>

#include "oracles.hpp"

namespace dyn = dynwfa::dyn;
namespace fs = std::filesystem;
using namespace dynwfa;

namespace
{
  // Tolerances.
  constexpr double c1_max_seconds = 1.0;
  constexpr double c2_max_seconds = 5.0;
  constexpr std::size_t c3_iterations = 10'000;
  constexpr double c3_max_relative_gap = 0.20;
  constexpr double c4_max_seconds = 30.0;
  constexpr double c5_max_seconds = 10.0;
  constexpr std::size_t c6_iterations = 1'000'000;
  constexpr double c6_min_ratio = 5.0;
  constexpr double c6_max_ratio = 500.0;
  constexpr double c6_max_dyn_ns = 5000.0;
  constexpr double c7_max_seconds = 300.0;
  constexpr int c7_processes = 8;
  constexpr int c9_samples = 10;

  int failures = 0;

  using clock_t_ = std::chrono::steady_clock;

  double seconds_since(clock_t_::time_point start)
  {
    return std::chrono::duration<double>(clock_t_::now() - start).count();
  }

  void report(int id, const std::string& name, bool ok,
              const std::string& detail)
  {
    std::cout << (ok ? "PASS" : "FAIL") << " C" << id << " " << name << ": "
              << detail << std::endl;
    if (!ok)
      ++failures;
  }

  std::string fmt(double v, int prec = 3)
  {
    std::ostringstream o;
    o.precision(prec);
    o << std::fixed << v;
    return o.str();
  }

  const char* a1_text = R"(context = lal_char(ab), b
$ -> 0
0 -> 0 a, b
0 -> 1 b
1 -> 1 a, b
1 -> $
)";

  const char* a2_body = R"($ -> 0
0 -> 0 a, b
0 -> 1 b
1 -> 1 a, b <2>
1 -> $
)";

  /*---------------.
  | C1: figure 1.  |
  `---------------*/

  void c1()
  {
    auto start = clock_t_::now();
    auto a1 = dyn::read_automaton(a1_text);
    auto a2z = dyn::read_automaton(std::string("context = lal_char(ab), z\n")
                                   + a2_body);
    auto a2m = dyn::read_automaton(std::string("context = lal_char(ab), zmin\n")
                                   + a2_body);
    auto bb1 = dyn::to_string(dyn::evaluate(a1, "bb"));
    auto aa1 = dyn::to_string(dyn::evaluate(a1, "aa"));
    auto bbz = dyn::to_string(dyn::evaluate(a2z, "bb"));
    auto bbm = dyn::to_string(dyn::evaluate(a2m, "bb"));
    auto t = seconds_since(start);
    bool ok = bb1 == "1" && aa1 == "0" && bbz == "3" && bbm == "0"
              && t < c1_max_seconds;
    report(1, "fig1-semantics", ok,
           "A1(bb)=" + bb1 + " A1(aa)=" + aa1 + " A2/z(bb)=" + bbz
           + " A2/zmin(bb)=" + bbm + " in " + fmt(t) + " s (limit "
           + fmt(c1_max_seconds, 1) + ")");
  }

  /*-------------------------.
  | C2: binary property.     |
  `-------------------------*/

  void c2()
  {
    auto start = clock_t_::now();
    auto a2z = dyn::read_automaton(std::string("context = lal_char(ab), z\n")
                                   + a2_body);
    auto a2m = dyn::read_automaton(std::string("context = lal_char(ab), zmin\n")
                                   + a2_body);
    auto words = oracle::words("ab", 1, 10);
    std::size_t z_bad = 0, zmin_bad = 0;
    std::string z_first, zmin_first;
    for (const auto& w : words)
      {
        std::int64_t bin = 0;
        for (char c : w)
          bin = 2 * bin + (c == 'b');
        auto got = dyn::to_string(dyn::evaluate(a2z, w));
        if (got != std::to_string(bin) && !z_bad++)
          z_first = w + " -> " + got;

        auto last_b = w.rfind('b');
        auto expected = last_b == std::string::npos
          ? 0 : 2 * std::count(w.begin() + last_b, w.end(), 'a');
        auto gotm = dyn::to_string(dyn::evaluate(a2m, w));
        if (gotm != std::to_string(expected) && !zmin_bad++)
          zmin_first = w + " -> " + gotm + " (expected "
                       + std::to_string(expected) + ")";
      }
    auto t = seconds_since(start);
    bool ok = words.size() == 2046 && !z_bad && !zmin_bad
              && t < c2_max_seconds;
    std::string detail = std::to_string(words.size()) + " words, z mismatches "
      + std::to_string(z_bad) + ", zmin mismatches " + std::to_string(zmin_bad);
    if (z_bad)
      detail += " [first z: " + z_first + "]";
    if (zmin_bad)
      detail += " [first zmin: " + zmin_first + "]";
    report(2, "binary-property", ok,
           detail + " in " + fmt(t) + " s (limit " + fmt(c2_max_seconds, 1)
           + ")");
  }

  /*-----------------------.
  | C3: Kleene pipeline.   |
  `-----------------------*/

  void c3()
  {
    auto ctx = dyn::make_context("lal_char(abc), b");
    auto e = dyn::make_expression(ctx, "[abc]*[abc]*");
    auto m = dyn::minimize(dyn::determinize(dyn::proper(dyn::thompson(e))));
    auto states = dyn::num_states(m);
    auto expr = dyn::to_string(dyn::to_expression(m));
    auto r = bench::run_pipeline(c3_iterations);
    auto gap = std::abs(r.dyn_total() - r.static_total()) / r.static_total();
    bool ok = states == 1 && expr == "[abc]*" && r.static_states == 1
              && r.dyn_states == 1 && r.static_expression == "[abc]*"
              && r.dyn_expression == "[abc]*" && gap < c3_max_relative_gap;
    report(3, "kleene-pipeline", ok,
           "states=" + std::to_string(states) + " expression=" + expr
           + " static " + fmt(r.static_total(), 2) + " us, dyn "
           + fmt(r.dyn_total(), 2) + " us per iteration over "
           + std::to_string(c3_iterations) + ", gap " + fmt(100 * gap, 1)
           + "% (limit " + fmt(100 * c3_max_relative_gap, 0) + "%)");
  }

  /*--------------------------------.
  | C4: minimization cross-check.   |
  `--------------------------------*/

  void c4()
  {
    using ctx_t = context<letterset<char_letters>, b>;
    auto start = clock_t_::now();
    std::mt19937 rng{2024};
    auto words = oracle::words("ab", 0, 6);
    std::size_t count_bad = 0, lang_bad = 0;
    for (int i = 0; i < 50; ++i)
      {
        auto nfa = oracle::random_automaton(
          ctx_t{letterset<char_letters>{"ab"}}, "ab", 5, 0.3, rng,
          [](std::mt19937&) { return true; });
        auto d = dyn::read_automaton(to_string(nfa));
        auto dfa = dyn::determinize(d);
        auto mo = dyn::minimize(dfa, "moore");
        auto si = dyn::minimize(dfa, "signature");
        auto br = dyn::minimize(d, "brzozowski");
        auto n = dyn::num_states(mo);
        if (n != dyn::num_states(si) || n != dyn::num_states(br))
          ++count_bad;
        for (const auto& w : words)
          if ((dyn::to_string(dyn::evaluate(mo, w)) == "1")
              != oracle::accepts(nfa, w))
            {
              ++lang_bad;
              break;
            }
      }
    auto t = seconds_since(start);
    bool ok = words.size() == 127 && !count_bad && !lang_bad
              && t < c4_max_seconds;
    report(4, "minimize-cross-check", ok,
           "50 NFAs, state count disagreements " + std::to_string(count_bad)
           + ", language mismatches " + std::to_string(lang_bad) + " on "
           + std::to_string(words.size()) + " words, in " + fmt(t)
           + " s (limit " + fmt(c4_max_seconds, 1) + ")");
  }

  /*-------------------------.
  | C5: algebra properties.  |
  `-------------------------*/

  template <typename WS, typename Gen>
  std::size_t semiring_violations(const WS& ws, Gen gen)
  {
    std::mt19937 rng{42};
    std::size_t bad = 0;
    auto eq = [&](const auto& l, const auto& r) { bad += !ws.equal(l, r); };
    for (int i = 0; i < 100; ++i)
      {
        auto a = gen(rng), b = gen(rng), c = gen(rng);
        eq(ws.add(ws.add(a, b), c), ws.add(a, ws.add(b, c)));
        eq(ws.add(a, b), ws.add(b, a));
        eq(ws.add(a, ws.zero()), a);
        eq(ws.mul(ws.mul(a, b), c), ws.mul(a, ws.mul(b, c)));
        eq(ws.mul(a, ws.one()), a);
        eq(ws.mul(ws.one(), a), a);
        eq(ws.mul(a, ws.add(b, c)), ws.add(ws.mul(a, b), ws.mul(a, c)));
        eq(ws.mul(ws.add(a, b), c), ws.add(ws.mul(a, c), ws.mul(b, c)));
        bad += !ws.is_zero(ws.mul(a, ws.zero()));
        bad += !ws.is_zero(ws.mul(ws.zero(), a));
      }
    return bad;
  }

  std::size_t join_violations()
  {
    std::vector<std::string> names = {
      "b", "f2", "z", "q", "zmin",
      "letterset<char_letters(ab)>", "letterset<char_letters(bc)>",
      "nullableset<letterset<char_letters(a)>>", "wordset<char_letters(c)>",
      "tupleset<letterset<char_letters(a)>, wordset<char_letters(b)>>",
      "tupleset<nullableset<letterset<char_letters(c)>>, "
      "letterset<char_letters(b)>>",
      "context<letterset<char_letters(ab)>, z>",
      "context<wordset<char_letters(b)>, q>",
      "context<letterset<char_letters(a)>, b>",
    };
    std::vector<type_spec> specs;
    for (const auto& n : names)
      specs.push_back(parse_type_spec(n));
    auto try_join = [](const type_spec& a,
                       const type_spec& b) -> std::optional<type_spec> {
      try
        {
          return join(a, b);
        }
      catch (const std::exception&)
        {
          return std::nullopt;
        }
    };
    std::size_t bad = 0;
    for (const auto& a : specs)
      {
        bad += !(join(a, a) == a);
        for (const auto& b : specs)
          {
            auto ab = try_join(a, b);
            auto ba = try_join(b, a);
            if (ab.has_value() != ba.has_value())
              {
                ++bad;
                continue;
              }
            if (!ab)
              continue;
            bad += !(*ab == *ba);
            for (const auto& c : specs)
              if (auto ab_c = try_join(*ab, c))
                {
                  auto bc = try_join(b, c);
                  auto a_bc = bc ? try_join(a, *bc) : std::nullopt;
                  bad += !a_bc || !(*a_bc == *ab_c);
                }
          }
      }
    return bad;
  }

  std::size_t conv_violations()
  {
    std::size_t bad = 0;
    std::mt19937 rng{7};
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 100; ++i)
      {
        std::int64_t a = d(rng), b = d(rng);
        bad += !(conv(q{}, z{}, z::add(a, b))
                 == q::add(conv(q{}, z{}, a), conv(q{}, z{}, b)));
        bad += !(conv(q{}, z{}, z::mul(a, b))
                 == q::mul(conv(q{}, z{}, a), conv(q{}, z{}, b)));
      }
    bad += !q::is_zero(conv(q{}, z{}, z::zero()));
    bad += !q::is_one(conv(q{}, z{}, z::one()));
    letterset<char_letters> from{"ab"};
    nullableset<letterset<char_letters>> mid{"abc"};
    wordset<char_letters> to{"abcd"};
    for (char c : std::string("ab"))
      bad += !(conv(to, mid, conv(mid, from, c)) == conv(to, from, c));
    return bad;
  }

  void c5()
  {
    auto start = clock_t_::now();
    auto bit = [](std::mt19937& r) { return bool(r() & 1); };
    std::size_t sr = 0;
    sr += semiring_violations(b{}, bit);
    sr += semiring_violations(f2{}, bit);
    sr += semiring_violations(z{}, [](std::mt19937& r) {
        return std::int64_t(std::uniform_int_distribution<int>(-20, 20)(r));
      });
    sr += semiring_violations(q{}, [](std::mt19937& r) {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
        return q::value(num(r), den(r));
      });
    sr += semiring_violations(zmin{}, [](std::mt19937& r) {
        auto v = std::uniform_int_distribution<int>(-5, 12)(r);
        return v == 12 ? zmin::zero() : zmin::value(v);
      });
    auto jn = join_violations();
    auto cv = conv_violations();
    auto t = seconds_since(start);
    bool ok = !sr && !jn && !cv && t < c5_max_seconds;
    report(5, "algebra-properties", ok,
           "semiring violations " + std::to_string(sr) + " (b, f2, z, q, zmin), "
           "join violations " + std::to_string(jn) + ", conv violations "
           + std::to_string(cv) + " in " + fmt(t) + " s (limit "
           + fmt(c5_max_seconds, 1) + ")");
  }

  /*-------------------.
  | C6: dispatch cost. |
  `-------------------*/

  void c6()
  {
    auto r = bench::run_dispatch(c6_iterations);
    auto ratio = r.dyn_call / r.virtual_call;
    bool ok = c6_min_ratio <= ratio && ratio <= c6_max_ratio
              && r.dyn_call < c6_max_dyn_ns;
    report(6, "dispatch-bench", ok,
           "empty " + fmt(r.empty, 2) + " ns, static " + fmt(r.static_call, 2)
           + " ns, virtual " + fmt(r.virtual_call, 2) + " ns, dyn "
           + fmt(r.dyn_call, 2) + " ns; dyn/virtual " + fmt(ratio, 1)
           + " (limits [" + fmt(c6_min_ratio, 0) + ", " + fmt(c6_max_ratio, 0)
           + "], dyn < " + fmt(c6_max_dyn_ns, 0) + " ns)");
  }

  /*--------------------------------------.
  | C7 and C8: through the CLI binary.    |
  `--------------------------------------*/

  std::string quote(const std::string& s)
  {
    std::string res = "'";
    for (char c : s)
      res += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return res + "'";
  }

  std::string slurp(const fs::path& p)
  {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
  }

  struct run_result
  {
    int status = -1;
    std::string out;
    std::string err;
  };

  /// Run the CLI with \a args, plugins in \a root.  \a tag names the
  /// capture files, so concurrent runs need distinct tags.
  run_result cli(const fs::path& root, const std::string& args,
                 const fs::path& scratch, const std::string& tag)
  {
    auto out = scratch / (tag + ".out");
    auto err = scratch / (tag + ".err");
    auto cmd = "DYNWFA_PLUGINS=" + quote(root.string()) + " "
               + quote(DYNWFA_CLI) + " " + args + " > " + quote(out.string())
               + " 2> " + quote(err.string());
    run_result res;
    int st = std::system(cmd.c_str());
    res.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
  }

  std::size_t count_compiles(const std::string& err)
  {
    std::size_t res = 0;
    std::istringstream is(err);
    for (std::string l; std::getline(is, l);)
      res += l.rfind("dynwfa: compiling", 0) == 0;
    return res;
  }

  std::string trim(std::string s)
  {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    return s;
  }

  /// Temporary files left behind by an interrupted or racing install.
  std::size_t leftovers(const fs::path& root)
  {
    static const std::regex tmp{R"(\.[0-9]+\.(so|log|tmp)$)"};
    std::size_t res = 0;
    for (const auto& e : fs::recursive_directory_iterator(root))
      res += std::regex_search(e.path().filename().string(), tmp);
    return res;
  }

  std::size_t stat_field(const std::string& stats, const std::string& key)
  {
    std::istringstream is(stats);
    for (std::string l; std::getline(is, l);)
      if (l.rfind(key + ": ", 0) == 0)
        return std::stoul(l.substr(key.size() + 2));
    return std::size_t(-1);
  }

  fs::path scratch_root()
  {
    auto res = fs::temp_directory_path()
               / ("dynwfa-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(res);
    fs::create_directories(res);
    return res;
  }

  void c7(const fs::path& scratch)
  {
    auto start = clock_t_::now();
    auto aut = scratch / "xyz_q.txt";
    std::ofstream(aut) << "context = lal_char(xyz), q\n$ -> 0\n0 -> 0 x, y, z\n"
                          "0 -> 1 y\n1 -> 1 x, y, z <2>\n1 -> $\n";
    auto args = "--verbose evaluate --automaton " + quote(aut.string())
                + " --word yy";

    // Sequential: compile once, then reuse from another process.
    auto root = scratch / "plugins-seq";
    auto first = cli(root, args, scratch, "seq1");
    auto second = cli(root, args, scratch, "seq2");
    auto first_n = count_compiles(first.err);
    auto second_n = count_compiles(second.err);
    bool seq_ok = first.status == 0 && second.status == 0
                  && trim(first.out) == "3" && trim(second.out) == "3"
                  && first_n == 1 && second_n == 0;

    // Concurrent on a cold root.
    auto croot = scratch / "plugins-conc";
    std::vector<run_result> results(c7_processes);
    std::vector<std::thread> ts;
    for (int i = 0; i < c7_processes; ++i)
      ts.emplace_back([&, i] {
          results[i] = cli(croot, args, scratch, "conc" + std::to_string(i));
        });
    for (auto& t : ts)
      t.join();
    int succeeded = 0;
    std::size_t conc_compiles = 0;
    for (const auto& r : results)
      {
        succeeded += r.status == 0 && trim(r.out) == "3";
        conc_compiles += count_compiles(r.err);
      }
    auto left = leftovers(croot);
    auto stats = cli(croot, "cache stats", scratch, "stats");
    auto libs = stat_field(stats.out, "libraries");
    auto after = cli(croot, args, scratch, "after");
    auto after_n = count_compiles(after.err);
    bool conc_ok = succeeded == c7_processes && left == 0 && libs == 1
                   && after.status == 0 && trim(after.out) == "3"
                   && after_n == 0;

    auto t = seconds_since(start);
    bool ok = seq_ok && conc_ok && t < c7_max_seconds;
    std::string detail = "first run " + std::to_string(first_n)
      + " compile(s) -> " + trim(first.out) + ", second run "
      + std::to_string(second_n) + " compile(s) -> " + trim(second.out)
      + "; " + std::to_string(succeeded) + "/" + std::to_string(c7_processes)
      + " concurrent runs ok (" + std::to_string(conc_compiles)
      + " compile(s)), " + std::to_string(left) + " temporary files left, "
      + std::to_string(libs) + " library, follow-up "
      + std::to_string(after_n) + " compile(s); " + fmt(t, 1) + " s (limit "
      + fmt(c7_max_seconds, 0) + ")";
    if (!seq_ok && first.status != 0)
      detail += " [stderr: " + trim(first.err) + "]";
    report(7, "runtime-instantiation", ok, detail);
  }

  void c8(const fs::path& scratch)
  {
    auto aut = scratch / "law_b.txt";
    std::ofstream(aut) << "context = law_char(ab), b\n$ -> 0\n0 -> 0 ab\n0 -> $\n";
    auto r = cli(scratch / "plugins-err",
                 "evaluate --automaton " + quote(aut.string()) + " --word ab",
                 scratch, "err");
    std::vector<std::string> lines;
    std::istringstream is(r.err);
    for (std::string l; std::getline(is, l);)
      lines.push_back(l);

    auto index_of = [&](const std::string& l) {
      auto i = std::find(lines.begin(), lines.end(), l);
      return std::size_t(i - lines.begin());
    };
    auto sig_i = index_of("  failed signature:");
    auto avail_i = index_of("  available versions:");
    auto cmd_i = index_of("  failed command:");
    std::vector<std::string> versions;
    if (avail_i < cmd_i && cmd_i < lines.size())
      versions.assign(lines.begin() + avail_i + 1, lines.begin() + cmd_i);
    bool ok = r.status != 0 && !lines.empty()
              && lines[0] == "evaluate: requires a free labelset"
              && sig_i == 1 && sig_i < avail_i && avail_i < cmd_i
              && cmd_i < lines.size() && !versions.empty()
              && std::is_sorted(versions.begin(), versions.end());
    report(8, "error-golden", ok,
           "exit " + std::to_string(r.status) + ", first line \""
           + (lines.empty() ? std::string() : lines[0]) + "\", "
           + std::to_string(versions.size()) + " available versions"
           + (std::is_sorted(versions.begin(), versions.end()) ? " (sorted)"
                                                               : " (unsorted)"));
  }

  /*-----------------------.
  | C9: facade parity.     |
  `-----------------------*/

  struct parity_state
  {
    std::set<std::pair<std::string, std::string>> covered;
    std::size_t checks = 0;
    std::vector<std::string> mismatches;

    template <typename S, typename D>
    void same(const std::string& name, const std::string& sig, S s, D d)
    {
      covered.emplace(name, sig);
      ++checks;
      auto sv = outcome(s);
      auto dv = outcome(d);
      if (sv != dv)
        mismatches.push_back(name + " [" + sig + "]: static \"" + sv
                             + "\" vs dyn \"" + dv + "\"");
    }

    template <typename F>
    static std::string outcome(F f)
    {
      try
        {
          return f();
        }
      catch (const std::exception& e)
        {
          return std::string("error: ") + e.what();
        }
    }
  };

  template <typename... T>
  std::string sig_of()
  {
    std::string res;
    ((res += (res.empty() ? "" : ", ") + T::sname()), ...);
    return res;
  }

  /// Labels, weights, words and expression atoms for a context.
  struct sample_spec
  {
    std::string vname;
    std::vector<std::string> labels;
    std::vector<std::string> weights;
    std::vector<std::string> atoms;
  };

  std::string pick(std::mt19937& rng, const std::vector<std::string>& v)
  {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }

  std::string weight_suffix(std::mt19937& rng, const sample_spec& sp)
  {
    auto w = pick(rng, sp.weights);
    return w.empty() ? "" : " <" + w + ">";
  }

  std::string random_text(std::mt19937& rng, const sample_spec& sp)
  {
    std::ostringstream o;
    o << "context = " << sp.vname << '\n';
    auto n = std::uniform_int_distribution<int>(1, 4)(rng);
    o << "$ -> 0" << weight_suffix(rng, sp) << '\n';
    std::bernoulli_distribution coin(0.25), half(0.4);
    for (int s = 0; s < n; ++s)
      {
        if (s && coin(rng))
          o << "$ -> " << s << weight_suffix(rng, sp) << '\n';
        if (half(rng))
          o << s << " -> $" << weight_suffix(rng, sp) << '\n';
        for (int d = 0; d < n; ++d)
          for (const auto& l : sp.labels)
            if (coin(rng))
              o << s << " -> " << d << ' ' << l << weight_suffix(rng, sp)
                << '\n';
      }
    return o.str();
  }

  std::string random_expression(std::mt19937& rng, const sample_spec& sp,
                                int depth)
  {
    switch (std::uniform_int_distribution<int>(0, depth <= 0 ? 0 : 4)(rng))
      {
      case 0:
        return pick(rng, sp.atoms);
      case 1:
        return "(" + random_expression(rng, sp, depth - 1) + "+"
               + random_expression(rng, sp, depth - 1) + ")";
      case 2:
        return "(" + random_expression(rng, sp, depth - 1)
               + random_expression(rng, sp, depth - 1) + ")";
      case 3:
        return "(" + random_expression(rng, sp, depth - 1) + ")*";
      default:
        {
          auto w = pick(rng, sp.weights);
          return (w.empty() ? "" : "<" + w + ">") + "("
                 + random_expression(rng, sp, depth - 1) + ")";
        }
      }
  }

  template <typename Aut>
  std::string text_of(const Aut& aut)
  {
    return to_string(aut);
  }

  template <typename Aut>
  std::string dot_of(const Aut& aut)
  {
    std::ostringstream o;
    print_dot(aut, o);
    return o.str();
  }

  /// Compare every registered algorithm on context \a Ctx, statically and
  /// through the dyn API, on random samples.
  template <typename Ctx>
  void parity(parity_state& st, const sample_spec& sp, std::mt19937& rng)
  {
    using ls_t = labelset_t_of<Ctx>;
    using ws_t = weightset_t_of<Ctx>;
    using aut_t = mutable_automaton<Ctx>;
    const auto asig = sig_of<aut_t>();
    const auto csig = sig_of<Ctx>();
    auto ctx = Ctx::make(sp.vname);
    auto dctx = dyn::make_context(sp.vname);
    st.same("make_context", csig, [&] { return ctx.vname(); },
            [&] { return dyn::to_string(dctx); });

    for (const auto& l : sp.labels)
      st.same("print_label", sig_of<ls_t>(),
              [&] { return to_string(ctx.labelset(), parse_value(ctx.labelset(), l)); },
              [&] {
                return dyn::to_string(dyn::make_label(
                  ctx.labelset(), parse_value(ctx.labelset(), l)));
              });

    std::vector<aut_t> sauts;
    std::vector<dyn::automaton> dauts;
    for (int i = 0; i < c9_samples; ++i)
      {
        auto text = random_text(rng, sp);
        sauts.push_back(read_automaton<Ctx>(text));
        dauts.push_back(dyn::read_automaton(text));
      }

    for (int i = 0; i < c9_samples; ++i)
      {
        const auto& sa = sauts[i];
        const auto& da = dauts[i];
        const auto& sb = sauts[(i + 1) % c9_samples];
        const auto& db = dauts[(i + 1) % c9_samples];
        const auto& sc = sauts[(i + 2) % c9_samples];
        const auto& dc = dauts[(i + 2) % c9_samples];
        auto shared = [](const aut_t& a) {
          return std::make_shared<const aut_t>(a);
        };

        st.same("read_automaton", csig, [&] { return text_of(sa); },
                [&] { return dyn::to_string(da); });
        st.same("print_automaton", asig, [&] { return dot_of(sa); },
                [&] { return dyn::to_string(da, "dot"); });
        st.same("num_states", asig,
                [&] { return std::to_string(sa.num_states()); },
                [&] { return std::to_string(dyn::num_states(da)); });
        st.same("strip", asig, [&] { return text_of(strip(sa)); },
                [&] { return dyn::to_string(dyn::strip(da)); });
        st.same("is_proper", asig,
                [&] { return std::to_string(is_proper(sa)); },
                [&] { return std::to_string(dyn::is_proper(da)); });
        if constexpr (!dyn::proper_bridge<aut_t>::unmet)
          st.same("proper", asig, [&] { return text_of(proper(sa)); },
                  [&] { return dyn::to_string(dyn::proper(da)); });
        if constexpr (!dyn::determinize_bridge<aut_t>::unmet)
          st.same("determinize", asig,
                  [&] { return dot_of(determinize(sa)); },
                  [&] { return dyn::to_string(dyn::determinize(da), "dot"); });
        if constexpr (!dyn::minimize_bridge<aut_t>::unmet)
          {
            auto sdfa = aut_t(determinize(sa));
            auto ddfa = dyn::determinize(da);
            for (auto algo : {"moore", "signature", "brzozowski", "auto"})
              {
                st.same("minimize", asig,
                        [&] { return text_of(minimize(sdfa, algo)); },
                        [&] { return dyn::to_string(dyn::minimize(ddfa, algo)); });
                st.same("minimize", asig,
                        [&] { return text_of(minimize(sa, algo)); },
                        [&] { return dyn::to_string(dyn::minimize(da, algo)); });
              }
          }
        if constexpr (!dyn::product_bridge<aut_t>::unmet)
          {
            st.same("product", asig,
                    [&] { return text_of(product(shared(sa))); },
                    [&] { return dyn::to_string(dyn::product({da})); });
            st.same("product", sig_of<aut_t, aut_t>(),
                    [&] { return dot_of(product(shared(sa), shared(sb))); },
                    [&] { return dyn::to_string(dyn::product({da, db}), "dot"); });
            st.same("product", sig_of<aut_t, aut_t, aut_t>(),
                    [&] {
                      return text_of(product(shared(sa), shared(sb), shared(sc)));
                    },
                    [&] { return dyn::to_string(dyn::product({da, db, dc})); });
          }
        st.same("union", sig_of<aut_t, aut_t>(),
                [&] { return text_of(union_(sa, sb)); },
                [&] { return dyn::to_string(dyn::union_(da, db)); });

        if constexpr (!dyn::to_expression_bridge<aut_t>::unmet)
          st.same("to_expression", asig,
                  [&] {
                    expressionset<Ctx> es{ctx};
                    return es.to_string(to_expression(sa));
                  },
                  [&] { return dyn::to_string(dyn::to_expression(da)); });

        if constexpr (is_letter_based_v<ls_t>)
          {
            using es_t = expressionset<Ctx>;
            using word_t = word_labelset_t<ls_t>;
            es_t es{ctx};
            auto etext = random_expression(rng, sp, 3);
            st.same("make_expression", csig,
                    [&] { return es.to_string(es.parse(etext)); },
                    [&] {
                      return dyn::to_string(dyn::make_expression(dctx, etext));
                    });
            st.same("print_expression", sig_of<es_t>(),
                    [&] { return es.to_string(es.parse(etext)); },
                    [&] {
                      return dyn::to_string(dyn::make_expression(dctx, etext));
                    });
            st.same("thompson", sig_of<es_t>(),
                    [&] { return text_of(thompson(es, es.parse(etext))); },
                    [&] {
                      return dyn::to_string(
                        dyn::thompson(dyn::make_expression(dctx, etext)));
                    });
            auto word = pick(rng, {"", "a", "b", "ab", "ba", "abb", "bab"});
            st.same("print_label", sig_of<word_t>(),
                    [&] { return word.empty() ? std::string("\\e") : word; },
                    [&] { return dyn::to_string(dyn::make_word(dctx, word)); });
            if constexpr (!dyn::evaluate_bridge<aut_t, word_t>::unmet)
              st.same("evaluate", sig_of<aut_t, word_t>(),
                      [&] {
                        return to_string(sa.weightset(), evaluate(sa, word));
                      },
                      [&] { return dyn::to_string(dyn::evaluate(da, word)); });
          }

        if constexpr (is_tupleset_v<ls_t>)
          [&]<unsigned... I>(std::integer_sequence<unsigned, I...>) {
            (st.same("focus",
                     asig + ", " + dyn::integral_sname(I),
                     [&] { return text_of(focus<I>(sa)); },
                     [&] { return dyn::to_string(dyn::focus(da, I)); }),
             ...);
          }(std::make_integer_sequence<unsigned, unsigned(ls_t::size())>{});

        // Weights of the context's weightset.
        auto w1 = pick(rng, sp.weights), w2 = pick(rng, sp.weights);
        if (w1.empty())
          w1 = "1";
        if (w2.empty())
          w2 = "1";
        ws_t ws = sa.weightset();
        auto wname = ws.vname();
        st.same("make_weight", sig_of<ws_t>(),
                [&] { return to_string(ws, parse_value(ws, w1)); },
                [&] { return dyn::to_string(dyn::make_weight(wname, w1)); });
        st.same("print_weight", sig_of<ws_t>(),
                [&] { return to_string(ws, parse_value(ws, w2)); },
                [&] { return dyn::to_string(dyn::make_weight(wname, w2)); });
        st.same("add_weights", sig_of<ws_t, ws_t>(),
                [&] {
                  auto [j, v] = sum_weight(ws, parse_value(ws, w1), ws,
                                           parse_value(ws, w2));
                  return to_string(j, v);
                },
                [&] {
                  return dyn::to_string(dyn::add_weights(
                    dyn::make_weight(wname, w1), dyn::make_weight(wname, w2)));
                });
      }
  }

  /// Weightsets that no builtin context uses, and the mixed sums.
  void weight_parity(parity_state& st, std::mt19937& rng)
  {
    auto same_ws = [&](auto ws, std::vector<std::string> pool) {
      using ws_t = decltype(ws);
      for (int i = 0; i < c9_samples; ++i)
        {
          auto w1 = pick(rng, pool), w2 = pick(rng, pool);
          st.same("make_weight", sig_of<ws_t>(),
                  [&] { return to_string(ws, parse_value(ws, w1)); },
                  [&] { return dyn::to_string(dyn::make_weight(ws.vname(), w1)); });
          st.same("print_weight", sig_of<ws_t>(),
                  [&] { return to_string(ws, parse_value(ws, w2)); },
                  [&] { return dyn::to_string(dyn::make_weight(ws.vname(), w2)); });
          st.same("add_weights", sig_of<ws_t, ws_t>(),
                  [&] {
                    auto [j, v] = sum_weight(ws, parse_value(ws, w1), ws,
                                             parse_value(ws, w2));
                    return to_string(j, v);
                  },
                  [&] {
                    return dyn::to_string(dyn::add_weights(
                      dyn::make_weight(ws.vname(), w1),
                      dyn::make_weight(ws.vname(), w2)));
                  });
        }
    };
    same_ws(f2{}, {"0", "1"});
    same_ws(b{}, {"0", "1"});

    std::vector<std::string> zs = {"-3", "0", "2", "7"};
    std::vector<std::string> qs = {"1/2", "-2/3", "0", "5"};
    for (int i = 0; i < c9_samples; ++i)
      {
        auto zv = pick(rng, zs), qv = pick(rng, qs);
        st.same("add_weights", sig_of<z, q>(),
                [&] {
                  auto [j, v] = sum_weight(z{}, parse_value(z{}, zv), q{},
                                           parse_value(q{}, qv));
                  return to_string(j, v);
                },
                [&] {
                  return dyn::to_string(dyn::add_weights(
                    dyn::make_weight("z", zv), dyn::make_weight("q", qv)));
                });
        st.same("add_weights", sig_of<q, z>(),
                [&] {
                  auto [j, v] = sum_weight(q{}, parse_value(q{}, qv), z{},
                                           parse_value(z{}, zv));
                  return to_string(j, v);
                },
                [&] {
                  return dyn::to_string(dyn::add_weights(
                    dyn::make_weight("q", qv), dyn::make_weight("z", zv)));
                });
      }
  }

  void c9(const std::set<std::pair<std::string, std::string>>& registered)
  {
    using lal = letterset<char_letters>;
    using lan = nullableset<lal>;
    using law = wordset<char_letters>;
    std::mt19937 rng{909};
    parity_state st;

    std::vector<std::string> lal_labels = {"a", "b"};
    std::vector<std::string> lan_labels = {"a", "b", "\\e"};
    std::vector<std::string> law_labels = {"a", "b", "ab", "ba", "\\e"};
    std::vector<std::string> ab_atoms = {"a", "b", "\\e"};
    std::vector<std::string> law_atoms = {"a", "b", "ab", "\\e"};
    std::vector<std::string> bw = {""};
    std::vector<std::string> zw = {"", "-1", "2", "3"};
    std::vector<std::string> zminw = {"", "0", "1", "4"};
    std::vector<std::string> qw = {"", "1/2", "-2", "3/4"};

    auto ctx = [](const char* spec) { return parse_context_spec(spec).vname(); };
    parity<context<lal, b>>(st, {ctx("lal_char(ab), b"), lal_labels, bw, ab_atoms}, rng);
    parity<context<lan, b>>(st, {ctx("lan_char(ab), b"), lan_labels, bw, ab_atoms}, rng);
    parity<context<law, b>>(st, {ctx("law_char(ab), b"), law_labels, bw, law_atoms}, rng);
    parity<context<lal, z>>(st, {ctx("lal_char(ab), z"), lal_labels, zw, ab_atoms}, rng);
    parity<context<lan, z>>(st, {ctx("lan_char(ab), z"), lan_labels, zw, ab_atoms}, rng);
    parity<context<lal, zmin>>(st, {ctx("lal_char(ab), zmin"), lal_labels, zminw, ab_atoms}, rng);
    parity<context<lan, zmin>>(st, {ctx("lan_char(ab), zmin"), lan_labels, zminw, ab_atoms}, rng);
    parity<dyn::builtin::lal_law_char_q>(
      st,
      {"context<tupleset<letterset<char_letters(ab)>, wordset<char_letters(xy)>>, q>",
       {"a|x", "b|\\e", "a|xy", "b|y"}, qw, {}},
      rng);
    weight_parity(st, rng);

    std::vector<std::string> uncovered;
    for (const auto& r : registered)
      if (!st.covered.count(r))
        uncovered.push_back(r.first + " [" + r.second + "]");
    bool ok = st.mismatches.empty() && uncovered.empty();
    std::string detail = std::to_string(st.checks) + " comparisons over "
      + std::to_string(st.covered.size()) + " (algorithm, signature) pairs, "
      + std::to_string(st.mismatches.size()) + " mismatches, "
      + std::to_string(uncovered.size()) + " of "
      + std::to_string(registered.size()) + " registered pairs uncovered";
    if (!st.mismatches.empty())
      detail += " [first: " + st.mismatches.front() + "]";
    if (!uncovered.empty())
      detail += " [first uncovered: " + uncovered.front() + "]";
    report(9, "facade-parity", ok, detail);
  }

  template <typename F>
  void guarded(int id, const std::string& name, F f)
  {
    try
      {
        f();
      }
    catch (const std::exception& e)
      {
        report(id, name, false, std::string("exception: ") + e.what());
      }
  }
}

int main()
{
  // Plugins of this process go to a private root.
  auto scratch = scratch_root();
  ::setenv("DYNWFA_PLUGINS", (scratch / "plugins-self").c_str(), 1);

  dyn::ensure_builtins();
  std::set<std::pair<std::string, std::string>> registered;
  for (const auto& r : dyn::registrations())
    if (r.reason.empty())
      registered.emplace(r.name, r.sig);

  guarded(1, "fig1-semantics", c1);
  guarded(2, "binary-property", c2);
  guarded(3, "kleene-pipeline", c3);
  guarded(4, "minimize-cross-check", c4);
  guarded(5, "algebra-properties", c5);
  guarded(6, "dispatch-bench", c6);
  guarded(7, "runtime-instantiation", [&] { c7(scratch); });
  guarded(8, "error-golden", [&] { c8(scratch); });
  guarded(9, "facade-parity", [&] { c9(registered); });

  fs::remove_all(scratch);
  std::cout << failures << " criterion(s) failed" << std::endl;
  return failures;
}
