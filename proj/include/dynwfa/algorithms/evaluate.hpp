#pragma once

#include <string>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  /// Weight of \a word: sum over the accepting paths of the product of
  /// the initial, transition and final weights.
  template <typename Aut>
  weight_t_of<Aut> evaluate(const Aut& aut, const std::string& word)
  {
    using ls_t = labelset_t_of<context_t_of<Aut>>;
    static_assert(ls_t::is_free(), "requires a free labelset");
    if constexpr (ls_t::is_free())
      {
        const auto& ws = aut.weightset();
        aut.labelset().word(word);
        auto zero = ws.zero();
        std::vector<weight_t_of<Aut>> v(aut.state_bound(), zero);
        std::vector<weight_t_of<Aut>> next(aut.state_bound(), zero);
        for (const auto& [s, w] : aut.initials())
          v[s] = w;
        for (char c : word)
          {
            std::fill(next.begin(), next.end(), zero);
            for (state_t s = 0; s < v.size(); ++s)
              {
                if (ws.is_zero(v[s]))
                  continue;
                const auto& out = aut.out(s);
                for (auto it = out.lower_bound({c, 0});
                     it != out.end() && it->first.first == c; ++it)
                  {
                    auto d = it->first.second;
                    next[d] = ws.add(next[d], ws.mul(v[s], it->second));
                  }
              }
            std::swap(v, next);
          }
        auto res = zero;
        for (const auto& [s, w] : aut.finals())
          res = ws.add(res, ws.mul(v[s], w));
        return res;
      }
  }
}
