#pragma once

// Brute-force reference implementations used to check the library.  They
// share nothing with the algorithms under test but the data structures.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>
#include <dynwfa/expressions/expressionset.hpp>

namespace oracle
{
  using dynwfa::state_t;

  /// All the words over \a letters of length in [min, max], shortest first.
  inline std::vector<std::string> words(const std::string& letters,
                                        std::size_t min, std::size_t max)
  {
    std::vector<std::string> res;
    std::vector<std::string> layer{""};
    for (std::size_t n = 0; n <= max; ++n)
      {
        if (min <= n)
          res.insert(res.end(), layer.begin(), layer.end());
        std::vector<std::string> next;
        for (const auto& w : layer)
          for (char c : letters)
            next.push_back(w + c);
        layer = std::move(next);
      }
    return res;
  }

  /// Weight of \a w by enumerating every path with backtracking.  Only
  /// for free labelsets (letter labels).
  template <typename Aut>
  auto path_weight(const Aut& aut, const std::string& w)
  {
    const auto& ws = aut.weightset();
    auto res = ws.zero();
    std::function<void(state_t, std::size_t, typename Aut::weight_t)> go
      = [&](state_t s, std::size_t i, typename Aut::weight_t acc) {
          if (i == w.size())
            {
              if (aut.is_final(s))
                res = ws.add(res, ws.mul(acc, aut.get_final(s)));
              return;
            }
          for (const auto& [k, tw] : aut.out(s))
            if (k.first == w[i])
              go(k.second, i + 1, ws.mul(acc, tw));
        };
    for (const auto& [s, iw] : aut.initials())
      go(s, 0, iw);
    return res;
  }

  /// Boolean acceptance by subset simulation.
  template <typename Aut>
  bool accepts(const Aut& aut, const std::string& w)
  {
    std::set<state_t> cur;
    for (const auto& [s, iw] : aut.initials())
      cur.insert(s);
    for (char c : w)
      {
        std::set<state_t> next;
        for (auto s : cur)
          for (const auto& [k, tw] : aut.out(s))
            if (k.first == c)
              next.insert(k.second);
        cur = std::move(next);
      }
    for (auto s : cur)
      if (aut.is_final(s))
        return true;
    return false;
  }

  /// Weight of \a w in the series of \a e, straight from the definitions
  /// (star through the constant term, as c*(e' c*)*).
  template <typename ES>
  typename ES::weight_t expression_weight(const ES& es,
                                          const typename ES::value_t& e,
                                          const std::string& w)
  {
    using type_t = dynwfa::rat::type_t;
    const auto& ws = es.weightset();
    switch (e->type)
      {
      case type_t::zero:
        return ws.zero();
      case type_t::one:
        return w.empty() ? ws.one() : ws.zero();
      case type_t::atom:
        return w.size() == 1 && w[0] == e->letter ? ws.one() : ws.zero();
      case type_t::lweight:
        return ws.mul(e->weight, expression_weight(es, e->subs.front(), w));
      case type_t::sum:
        {
          auto res = ws.zero();
          for (const auto& s : e->subs)
            res = ws.add(res, expression_weight(es, s, w));
          return res;
        }
      case type_t::prod:
        {
          // Fold left to right over the factors, tracking every split.
          std::vector<typename ES::weight_t> v(w.size() + 1, ws.zero());
          v[0] = ws.one();
          for (const auto& f : e->subs)
            {
              std::vector<typename ES::weight_t> next(w.size() + 1, ws.zero());
              for (std::size_t i = 0; i <= w.size(); ++i)
                if (!ws.is_zero(v[i]))
                  for (std::size_t j = i; j <= w.size(); ++j)
                    next[j] = ws.add(next[j],
                                     ws.mul(v[i], expression_weight(
                                                    es, f, w.substr(i, j - i))));
              v = std::move(next);
            }
          return v[w.size()];
        }
      case type_t::star:
        {
          const auto& f = e->subs.front();
          auto c = ws.star(expression_weight(es, f, ""));
          // g[i]: weight of the suffix from i in (f' c*)*.
          std::vector<typename ES::weight_t> g(w.size() + 1, ws.zero());
          g[w.size()] = ws.one();
          for (std::size_t i = w.size(); i-- > 0;)
            for (std::size_t j = i + 1; j <= w.size(); ++j)
              g[i] = ws.add(g[i],
                            ws.mul(ws.mul(expression_weight(
                                            es, f, w.substr(i, j - i)),
                                          c),
                                   g[j]));
          return ws.mul(c, g[0]);
        }
      }
    return ws.zero();
  }

  /// A random automaton with up to \a max_states states over \a letters.
  /// \a weight draws a transition weight.
  template <typename Ctx, typename Weight>
  dynwfa::mutable_automaton<Ctx> random_automaton(const Ctx& ctx,
                                                  const std::string& letters,
                                                  std::size_t max_states,
                                                  double density,
                                                  std::mt19937& rng,
                                                  Weight weight)
  {
    dynwfa::mutable_automaton<Ctx> res{ctx};
    auto n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
    for (std::size_t i = 0; i < n; ++i)
      res.new_state();
    std::bernoulli_distribution coin(density);
    std::bernoulli_distribution half(0.4);
    for (state_t s = 0; s < n; ++s)
      {
        if (s == 0 || half(rng))
          res.set_initial(s, weight(rng));
        if (half(rng))
          res.set_final(s, weight(rng));
        for (char c : letters)
          for (state_t d = 0; d < n; ++d)
            if (coin(rng))
              res.add_transition(s, c, d, weight(rng));
      }
    return res;
  }
}
