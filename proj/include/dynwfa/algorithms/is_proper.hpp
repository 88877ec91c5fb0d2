#pragma once

#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  /// Whether no transition is labeled by the empty word.
  template <typename Aut>
  bool is_proper(const Aut& aut)
  {
    using ls_t = labelset_t_of<context_t_of<Aut>>;
    if constexpr (ls_t::is_free() || !ls_t::has_one())
      {
        // No label can be the empty word: nothing to check.
        (void) aut;
        return true;
      }
    else
      {
        for (auto s : aut.states())
          for (const auto& [k, w] : aut.out(s))
            if (ls_t::is_one(k.first))
              return false;
        return true;
      }
  }
}
