#pragma once

#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (weightset vname: string, text: string) -> weight.
  template <typename WS>
  struct make_weight_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      auto ws = parse_all(arg<std::string>(args, 0),
                          [](std::istream& is) { return WS::make(is); });
      auto w = parse_value(ws, arg<std::string>(args, 1));
      return make_weight(ws, std::move(w));
    }
  };
}
