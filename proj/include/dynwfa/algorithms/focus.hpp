#pragma once

#include <memory>

#include <dynwfa/automata/decorated.hpp>

namespace dynwfa
{
  /// Keep only tape \a Tape of a tupleset-labeled automaton.  Transitions
  /// that become equal add their weights.
  template <std::size_t Tape, typename Aut>
  auto focus(const std::shared_ptr<const Aut>& aut)
  {
    using ls_t = labelset_t_of<context_t_of<Aut>>;
    static_assert(is_tupleset_v<ls_t>, "requires a tupleset labelset");
    if constexpr (is_tupleset_v<ls_t>)
      {
        static_assert(Tape < ls_t::size(), "tape out of range");
        if constexpr (Tape < ls_t::size())
          {
            using tape_t = typename ls_t::template valueset_t<Tape>;
            using ctx_t = context<tape_t, weightset_t_of<context_t_of<Aut>>>;
            focus_automaton<ctx_t, Tape> res{
              ctx_t{aut->labelset().template set<Tape>(), aut->weightset()},
              aut};
            // Same ids as the source, holes included.
            for (state_t s = 0; s < aut->state_bound(); ++s)
              res.new_state();
            for (state_t s = 0; s < aut->state_bound(); ++s)
              if (!aut->has_state(s))
                res.del_state(s);
            for (const auto& [s, w] : aut->initials())
              res.set_initial(s, w);
            for (const auto& [s, w] : aut->finals())
              res.set_final(s, w);
            for (auto s : aut->states())
              for (const auto& [k, w] : aut->out(s))
                res.add_transition(s, std::get<Tape>(k.first), k.second, w);
            return res;
          }
      }
  }

  template <std::size_t Tape, typename Aut>
    requires requires { typename Aut::context_t; }
  auto focus(const Aut& aut)
  {
    return focus<Tape>(std::make_shared<const Aut>(aut));
  }
}
