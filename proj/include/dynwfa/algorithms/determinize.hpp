#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <vector>

#include <dynwfa/automata/decorated.hpp>

namespace dynwfa
{
  namespace detail
  {
    /// Accessible subset construction of \a aut into \a res, which must
    /// be empty.  The empty subset is never built.
    template <typename Aut, typename Res>
    void determinize_into(const Aut& aut, Res& res)
    {
      using set_t = std::vector<state_t>;
      std::map<set_t, state_t> ids;
      std::deque<std::pair<set_t, state_t>> todo;
      auto id_of = [&](set_t&& set) {
        auto it = ids.find(set);
        if (it != ids.end())
          return it->second;
        auto s = res.new_state(set);
        for (auto q : set)
          if (aut.is_final(q))
            {
              res.set_final(s);
              break;
            }
        ids.emplace(set, s);
        todo.emplace_back(std::move(set), s);
        return s;
      };

      set_t init;
      for (const auto& [s, w] : aut.initials())
        init.push_back(s);
      if (init.empty())
        return;
      res.set_initial(id_of(std::move(init)));

      const auto& letters = aut.labelset().generators();
      set_t next;
      while (!todo.empty())
        {
          auto [set, s] = std::move(todo.front());
          todo.pop_front();
          for (char c : letters)
            {
              next.clear();
              for (auto q : set)
                {
                  const auto& out = aut.out(q);
                  for (auto it = out.lower_bound({c, 0});
                       it != out.end() && it->first.first == c; ++it)
                    next.push_back(it->first.second);
                }
              if (next.empty())
                continue;
              std::sort(next.begin(), next.end());
              next.erase(std::unique(next.begin(), next.end()), next.end());
              res.set_transition(s, c, id_of(set_t(next)),
                                 res.weightset().one());
            }
        }
    }
  }

  /// Subset construction, reachable part, over a Boolean weightset.
  template <typename Aut>
  auto determinize(const std::shared_ptr<const Aut>& aut)
  {
    using ctx_t = context_t_of<Aut>;
    static_assert(is_boolean_v<weightset_t_of<ctx_t>>,
                  "requires Boolean weightset");
    static_assert(labelset_t_of<ctx_t>::is_free(), "requires a free labelset");
    using res_t = origin_automaton<ctx_t>;
    res_t res{aut->context(), "subset", res_t::shape::set, {aut}};
    if constexpr (is_boolean_v<weightset_t_of<ctx_t>>
                  && labelset_t_of<ctx_t>::is_free())
      detail::determinize_into(*aut, res);
    return res;
  }

  template <typename Aut>
    requires requires { typename Aut::context_t; }
  auto determinize(const Aut& aut)
  {
    return determinize(std::make_shared<const Aut>(aut));
  }
}
