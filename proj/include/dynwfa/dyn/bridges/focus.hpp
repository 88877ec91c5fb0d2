#pragma once

#include <dynwfa/algorithms/focus.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  namespace detail
  {
    template <typename LS, unsigned Tape>
    constexpr const char* focus_unmet()
    {
      if constexpr (!is_tupleset_v<LS>)
        return "requires a tupleset labelset";
      else
        return Tape < LS::size() ? nullptr : "tape out of range";
    }
  }

  /// (automaton, tape: integral) -> automaton over one tape.
  template <typename Aut, typename Tape>
  struct focus_bridge
  {
    static constexpr const char* unmet
      = detail::focus_unmet<labelset_t_of<context_t_of<Aut>>, Tape::value>();

    static erased call(std::span<const erased> args)
    {
      return make_automaton(
        dynwfa::focus<Tape::value>(aut_arg<Aut>(args, 0)));
    }
  };
}
