#pragma once

#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (vname: string) -> context.
  template <typename Ctx>
  struct make_context_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      return make_context(Ctx::make(arg<std::string>(args, 0)));
    }
  };
}
