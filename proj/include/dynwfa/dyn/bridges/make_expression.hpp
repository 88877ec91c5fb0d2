#pragma once

#include <dynwfa/dyn/bridges/common.hpp>
#include <dynwfa/expressions/expressionset.hpp>

namespace dynwfa::dyn
{
  /// (context, text: string) -> expression.
  template <typename Ctx>
  struct make_expression_bridge
  {
    static constexpr const char* unmet
      = detail::unless(detail::letter_based_ctx_v<Ctx>,
                       "requires a letter-based labelset");

    static erased call(std::span<const erased> args)
    {
      const auto& ctx = arg<context>(args, 0).template as<Ctx>();
      expressionset<Ctx> es{ctx};
      auto e = es.parse(arg<std::string>(args, 1));
      return make_expression(es, std::move(e));
    }
  };
}
