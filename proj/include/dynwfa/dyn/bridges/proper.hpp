#pragma once

#include <dynwfa/algorithms/proper.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton) -> automaton over the free labelset.
  template <typename Aut>
  struct proper_bridge
  {
    static constexpr const char* unmet
      = detail::unless(has_free_v<labelset_t_of<context_t_of<Aut>>>,
                       "requires a nullable or free labelset");

    static erased call(std::span<const erased> args)
    {
      return make_automaton(dynwfa::proper(*aut_arg<Aut>(args, 0)));
    }
  };
}
