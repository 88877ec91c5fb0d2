#pragma once

#include <dynwfa/algorithms/determinize.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton) -> subset automaton.
  template <typename Aut>
  struct determinize_bridge
  {
    static constexpr const char* unmet
      = detail::boolean_free_unmet<context_t_of<Aut>>;

    static erased call(std::span<const erased> args)
    {
      return make_automaton(dynwfa::determinize(aut_arg<Aut>(args, 0)));
    }
  };
}
