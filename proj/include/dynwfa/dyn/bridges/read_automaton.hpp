#pragma once

#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (context, body: string) -> automaton.
  template <typename Ctx>
  struct read_automaton_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& ctx = arg<context>(args, 0).template as<Ctx>();
      return make_automaton(
        dynwfa::read_automaton(ctx, arg<std::string>(args, 1)));
    }
  };
}
