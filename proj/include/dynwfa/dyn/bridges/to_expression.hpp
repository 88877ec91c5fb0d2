#pragma once

#include <dynwfa/algorithms/to_expression.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton) -> expression.
  template <typename Aut>
  struct to_expression_bridge
  {
    static constexpr const char* unmet
      = detail::unless(detail::letter_based_ctx_v<context_t_of<Aut>>,
                       "requires a letter-based labelset");

    static erased call(std::span<const erased> args)
    {
      const auto& aut = *aut_arg<Aut>(args, 0);
      expressionset<context_t_of<Aut>> es{aut.context()};
      return make_expression(es, dynwfa::to_expression(aut));
    }
  };
}
