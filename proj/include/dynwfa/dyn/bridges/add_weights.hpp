#pragma once

#include <dynwfa/algorithms/sum_weight.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (weight, weight) -> weight in the join of the weightsets.
  template <typename WS1, typename WS2>
  struct add_weights_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& l = valued_arg<WS1, weight_tag>(args, 0);
      const auto& r = valued_arg<WS2, weight_tag>(args, 1);
      auto [ws, v] = sum_weight(l.valueset, l.value, r.valueset, r.value);
      return make_weight(ws, std::move(v));
    }
  };
}
