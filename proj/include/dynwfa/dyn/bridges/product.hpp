#pragma once

#include <dynwfa/algorithms/product.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automata: list) -> product automaton.  The signature is the
  /// concatenation of the element snames; elements are re-typed by
  /// position.
  template <typename... Auts>
  struct product_bridge
  {
    static constexpr const char* unmet
      = detail::unless((detail::free_ctx_v<context_t_of<Auts>> && ...),
                       "requires a free labelset");

    static erased call(std::span<const erased> args)
    {
      const auto& list = arg<automaton_list>(args, 0);
      if (list.size() != sizeof...(Auts))
        throw std::invalid_argument("product: invalid number of operands");
      return call_(list, std::index_sequence_for<Auts...>{});
    }

  private:
    template <std::size_t... I>
    static erased call_(const automaton_list& list, std::index_sequence<I...>)
    {
      return make_automaton(dynwfa::product(
        list[I].template as<std::tuple_element_t<I, std::tuple<Auts...>>>()...));
    }
  };
}
