#pragma once

#include <dynwfa/algorithms/union.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton, automaton) -> automaton over the joined context.
  template <typename A, typename B>
  struct union_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      return make_automaton(
        dynwfa::union_(*aut_arg<A>(args, 0), *aut_arg<B>(args, 1)));
    }
  };
}
