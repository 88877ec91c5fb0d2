#pragma once

#include <dynwfa/algorithms/minimize.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton, algo: string) -> minimal automaton.  The algorithm name
  /// is a plain value: one bridge serves all the flavors.
  template <typename Aut>
  struct minimize_bridge
  {
    static constexpr const char* unmet
      = detail::boolean_free_unmet<context_t_of<Aut>>;

    static erased call(std::span<const erased> args)
    {
      return make_automaton(
        dynwfa::minimize(aut_arg<Aut>(args, 0), arg<std::string>(args, 1)));
    }
  };
}
