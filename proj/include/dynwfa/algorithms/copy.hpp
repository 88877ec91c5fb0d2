#pragma once

#include <deque>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  /// States reachable from an initial state, indexed by state id.
  template <typename Aut>
  std::vector<bool> accessible_states(const Aut& aut)
  {
    std::vector<bool> res(aut.state_bound(), false);
    std::deque<state_t> todo;
    for (const auto& [s, w] : aut.initials())
      if (!res[s])
        {
          res[s] = true;
          todo.push_back(s);
        }
    while (!todo.empty())
      {
        auto s = todo.front();
        todo.pop_front();
        for (const auto& [k, w] : aut.out(s))
          if (!res[k.second])
            {
              res[k.second] = true;
              todo.push_back(k.second);
            }
      }
    return res;
  }

  /// States from which a final state is reachable.
  template <typename Aut>
  std::vector<bool> coaccessible_states(const Aut& aut)
  {
    std::vector<bool> res(aut.state_bound(), false);
    std::deque<state_t> todo;
    for (const auto& [s, w] : aut.finals())
      if (!res[s])
        {
          res[s] = true;
          todo.push_back(s);
        }
    while (!todo.empty())
      {
        auto s = todo.front();
        todo.pop_front();
        for (const auto& [src, l] : aut.in(s))
          if (!res[src])
            {
              res[src] = true;
              todo.push_back(src);
            }
      }
    return res;
  }

  template <typename Aut>
  std::vector<bool> useful_states(const Aut& aut)
  {
    auto res = accessible_states(aut);
    auto co = coaccessible_states(aut);
    for (std::size_t i = 0; i < res.size(); ++i)
      res[i] = res[i] && co[i];
    return res;
  }

  /// Copy the states selected by \a keep (ascending ids) of \a in into
  /// \a out, mapping labels and weights.  Returns the state map, with
  /// state_t(-1) for dropped states.
  template <typename In, typename Out, typename Keep, typename ConvLabel,
            typename ConvWeight>
  std::vector<state_t> copy_into(const In& in, Out& out, Keep keep,
                                 ConvLabel conv_label, ConvWeight conv_weight)
  {
    std::vector<state_t> map(in.state_bound(), state_t(-1));
    for (auto s : in.states())
      if (keep(s))
        map[s] = out.new_state();
    for (const auto& [s, w] : in.initials())
      if (map[s] != state_t(-1))
        out.add_initial(map[s], conv_weight(w));
    for (auto s : in.states())
      if (map[s] != state_t(-1))
        for (const auto& [k, w] : in.out(s))
          if (map[k.second] != state_t(-1))
            out.add_transition(map[s], conv_label(k.first), map[k.second],
                               conv_weight(w));
    for (const auto& [s, w] : in.finals())
      if (map[s] != state_t(-1))
        out.add_final(map[s], conv_weight(w));
    return map;
  }

  /// Same-context copy of the states selected by \a keep.
  template <typename Aut, typename Keep>
  mutable_automaton<context_t_of<Aut>> copy_states(const Aut& aut, Keep keep)
  {
    mutable_automaton<context_t_of<Aut>> res{aut.context()};
    auto id = [](const auto& x) { return x; };
    copy_into(aut, res, keep, id, id);
    return res;
  }

  /// The useful part, renumbered.
  template <typename Aut>
  mutable_automaton<context_t_of<Aut>> trim(const Aut& aut)
  {
    auto useful = useful_states(aut);
    return copy_states(aut, [&](state_t s) { return bool(useful[s]); });
  }

  /// At most one initial state, and at most one transition per (state,
  /// label).
  template <typename Aut>
  bool is_deterministic(const Aut& aut)
  {
    if (1 < aut.initials().size())
      return false;
    for (auto s : aut.states())
      {
        const auto& out = aut.out(s);
        for (auto it = out.begin(); it != out.end(); ++it)
          {
            auto next = std::next(it);
            if (next != out.end() && next->first.first == it->first.first)
              return false;
          }
      }
    return true;
  }

  /// Reverse every transition and swap initial and final weights.
  template <typename Aut>
  mutable_automaton<context_t_of<Aut>> transpose(const Aut& aut)
  {
    mutable_automaton<context_t_of<Aut>> res{aut.context()};
    std::vector<state_t> map(aut.state_bound(), state_t(-1));
    for (auto s : aut.states())
      map[s] = res.new_state();
    for (const auto& [s, w] : aut.initials())
      res.set_final(map[s], w);
    for (const auto& [s, w] : aut.finals())
      res.set_initial(map[s], w);
    for (auto s : aut.states())
      for (const auto& [k, w] : aut.out(s))
        res.set_transition(map[k.second], k.first, map[s], w);
    return res;
  }
}
