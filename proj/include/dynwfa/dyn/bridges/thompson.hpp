#pragma once

#include <dynwfa/algorithms/thompson.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (expression) -> automaton over the nullable labelset.
  template <typename ES>
  struct thompson_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& e = valued_arg<ES, expression_tag>(args, 0);
      return make_automaton(dynwfa::thompson(e.valueset, e.value));
    }
  };
}
