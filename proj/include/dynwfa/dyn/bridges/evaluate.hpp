#pragma once

#include <dynwfa/algorithms/evaluate.hpp>
#include <dynwfa/dyn/bridges/common.hpp>

namespace dynwfa::dyn
{
  /// (automaton, word: label) -> weight over the automaton's weightset.
  template <typename Aut, typename WordSet>
  struct evaluate_bridge
  {
    static constexpr const char* unmet
      = detail::unless(detail::free_ctx_v<context_t_of<Aut>>,
                       "requires a free labelset");

    static erased call(std::span<const erased> args)
    {
      const auto& aut = *aut_arg<Aut>(args, 0);
      const auto& word = valued_arg<WordSet, label_tag>(args, 1);
      return make_weight(aut.weightset(), dynwfa::evaluate(aut, word.value));
    }
  };
}
