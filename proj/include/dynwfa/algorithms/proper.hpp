#pragma once

#include <sstream>
#include <stdexcept>
#include <vector>

#include <dynwfa/algorithms/copy.hpp>
#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  namespace detail
  {
    /// Remove the spontaneous transitions of \a aut in place.
    ///
    /// States are processed once, in increasing order.  For a state s, an
    /// ε-loop of weight l is removed and its star folded into the outgoing
    /// transitions and the final weight of s.  Then every incoming
    /// ε-transition p -w-> s is replaced by copies of the outgoing
    /// transitions of s, premultiplied by w, and p inherits w times the
    /// final weight of s.  A processed state never receives an
    /// ε-transition again, so one pass suffices.
    template <typename Aut>
    void remove_spontaneous(Aut& aut)
    {
      using ls_t = typename Aut::labelset_t;
      const auto& ws = aut.weightset();
      const auto eps = ls_t::one();
      for (auto s : aut.states())
        {
          auto loop = aut.weight_of(s, eps, s);
          if (!ws.is_zero(loop))
            {
              if (!ws.is_starrable(loop))
                {
                  std::ostringstream o;
                  ws.print(loop, o);
                  throw std::domain_error("proper: not starrable: " + o.str());
                }
              aut.del_transition(s, eps, s);
              auto l = ws.star(loop);
              auto out = aut.out(s);
              for (const auto& [k, w] : out)
                aut.set_transition(s, k.first, k.second, ws.mul(l, w));
              if (aut.is_final(s))
                aut.set_final(s, ws.mul(l, aut.get_final(s)));
            }
          std::vector<std::pair<state_t, typename Aut::weight_t>> preds;
          for (const auto& [p, l] : aut.in(s))
            if (ls_t::is_one(l))
              preds.emplace_back(p, aut.weight_of(p, eps, s));
          for (const auto& [p, w] : preds)
            aut.del_transition(p, eps, s);
          const auto out = aut.out(s);
          for (const auto& [p, w] : preds)
            {
              for (const auto& [k, v] : out)
                aut.add_transition(p, k.first, k.second, ws.mul(w, v));
              if (aut.is_final(s))
                aut.add_final(p, ws.mul(w, aut.get_final(s)));
            }
        }
    }
  }

  /// Equivalent automaton without spontaneous transitions, over the free
  /// version of the labelset, trimmed.
  template <typename Aut>
  auto proper(const Aut& aut)
  {
    using ls_t = labelset_t_of<context_t_of<Aut>>;
    static_assert(has_free_v<ls_t>, "requires a nullable or free labelset");
    if constexpr (has_free_v<ls_t>)
      {
        auto ctx = make_free_context(aut.context());
        mutable_automaton<decltype(ctx)> res{ctx};
        auto id = [](const auto& x) { return x; };
        if constexpr (ls_t::is_free())
          copy_into(aut, res, [](state_t) { return true; }, id, id);
        else
          {
            auto work = copy_states(aut, [](state_t) { return true; });
            detail::remove_spontaneous(work);
            auto useful = useful_states(work);
            copy_into(work, res, [&](state_t s) { return bool(useful[s]); },
                      [](const auto& l) { return *l; }, id);
          }
        return res;
      }
  }
}
