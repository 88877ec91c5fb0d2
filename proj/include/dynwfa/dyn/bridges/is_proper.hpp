#pragma once

#include <dynwfa/algorithms/is_proper.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton) -> bool.
  template <typename Aut>
  struct is_proper_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      return dynwfa::is_proper(*aut_arg<Aut>(args, 0));
    }
  };
}
