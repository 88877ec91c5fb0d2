#pragma once

#include <dynwfa/algebra/join.hpp>
#include <dynwfa/algorithms/copy.hpp>
#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  /// Disjoint union over the join of the contexts: the states of \a a,
  /// then those of \a b.
  template <typename A, typename B>
  auto union_(const A& a, const B& b)
  {
    auto ctx = join(a.context(), b.context());
    mutable_automaton<decltype(ctx)> res{ctx};
    auto all = [](state_t) { return true; };
    auto add = [&](const auto& aut) {
      const auto& ls = aut.labelset();
      const auto& ws = aut.weightset();
      copy_into(aut, res, all,
                [&](const auto& l) { return conv(res.labelset(), ls, l); },
                [&](const auto& w) { return conv(res.weightset(), ws, w); });
    };
    add(a);
    add(b);
    return res;
  }
}
