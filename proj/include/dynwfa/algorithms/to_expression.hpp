#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>
#include <dynwfa/expressions/expressionset.hpp>

namespace dynwfa
{
  /// Rational expression by state elimination.
  ///
  /// A fresh source is linked to the initial states and the final states
  /// to a fresh sink, edges carrying expressions.  States are then
  /// eliminated one at a time, always picking the one with the smallest
  /// in-degree times out-degree (self loops excluded), ties broken by id.
  template <typename Aut>
  auto to_expression(const Aut& aut)
  {
    using ctx_t = context_t_of<Aut>;
    static_assert(is_letter_based_v<labelset_t_of<ctx_t>>,
                  "requires a letter-based labelset");
    using es_t = expressionset<ctx_t>;
    using expr_t = typename es_t::value_t;
    es_t es{aut.context()};

    const long src = aut.state_bound();
    const long dst = src + 1;
    std::map<std::pair<long, long>, expr_t> edge;
    std::map<long, std::set<long>> succ, pred;
    auto add_edge = [&](long p, long q, const expr_t& e) {
      auto [it, inserted] = edge.try_emplace({p, q}, e);
      if (!inserted)
        it->second = es.add(it->second, e);
      if (p != q)
        {
          succ[p].insert(q);
          pred[q].insert(p);
        }
    };

    for (const auto& [s, w] : aut.initials())
      add_edge(src, s, es.lweight(w, es.one()));
    for (auto s : aut.states())
      for (const auto& [k, w] : aut.out(s))
        add_edge(s, k.second, es.lweight(w, es.label(k.first)));
    for (const auto& [s, w] : aut.finals())
      add_edge(s, dst, es.lweight(w, es.one()));

    std::set<long> todo;
    for (auto s : aut.states())
      todo.insert(s);
    while (!todo.empty())
      {
        long best = -1;
        std::size_t best_cost = 0;
        for (auto s : todo)
          {
            auto cost = pred[s].size() * succ[s].size();
            if (best == -1 || cost < best_cost)
              {
                best = s;
                best_cost = cost;
              }
          }
        auto s = best;
        todo.erase(s);
        auto loop_it = edge.find({s, s});
        std::optional<expr_t> loop;
        if (loop_it != edge.end())
          {
            loop = es.star(loop_it->second);
            edge.erase(loop_it);
          }
        for (auto p : pred[s])
          {
            auto in = edge.at({p, s});
            if (loop)
              in = es.mul(in, *loop);
            for (auto q : succ[s])
              add_edge(p, q, es.mul(in, edge.at({s, q})));
          }
        for (auto p : pred[s])
          {
            edge.erase({p, s});
            succ[p].erase(s);
          }
        for (auto q : succ[s])
          {
            edge.erase({s, q});
            pred[q].erase(s);
          }
        pred.erase(s);
        succ.erase(s);
      }
    auto it = edge.find({src, dst});
    return it == edge.end() ? es.zero() : it->second;
  }
}
