#pragma once

#include <array>
#include <deque>
#include <map>
#include <memory>
#include <tuple>

#include <dynwfa/algebra/join.hpp>
#include <dynwfa/automata/decorated.hpp>

namespace dynwfa
{
  namespace detail
  {
    template <typename... Auts>
    class product_impl
    {
    public:
      static constexpr std::size_t n = sizeof...(Auts);
      using ctx_t = decltype(join(std::declval<const context_t_of<Auts>&>()...));
      using res_t = origin_automaton<ctx_t>;
      using key_t = std::array<state_t, n>;
      using weight_t = weight_t_of<res_t>;

      explicit product_impl(const std::shared_ptr<const Auts>&... auts)
        : auts_(auts...)
        , res_(join(auts->context()...), "product", res_t::shape::tuple,
               {auts...})
      {}

      res_t operator()()
      {
        key_t k;
        initials_<0>(k, res_.weightset().one());
        while (!todo_.empty())
          {
            auto [src, s] = todo_.front();
            todo_.pop_front();
            const auto& a0 = *std::get<0>(auts_);
            for (const auto& [lk, w] : a0.out(src[0]))
              {
                key_t dst = src;
                dst[0] = lk.second;
                step_<1>(s, lk.first, dst, conv_<0>(w));
              }
          }
        return std::move(res_);
      }

    private:
      template <std::size_t I>
      weight_t conv_(const weight_t_of<std::tuple_element_t<I, std::tuple<Auts...>>>& w) const
      {
        return conv(res_.weightset(), std::get<I>(auts_)->weightset(), w);
      }

      state_t state_(const key_t& k)
      {
        auto it = ids_.find(k);
        if (it != ids_.end())
          return it->second;
        auto s = res_.new_state(std::vector<state_t>(k.begin(), k.end()));
        ids_.emplace(k, s);
        todo_.emplace_back(k, s);
        set_final_<0>(k, s, res_.weightset().one());
        return s;
      }

      template <std::size_t I>
      void set_final_(const key_t& k, state_t s, const weight_t& w)
      {
        if constexpr (I == n)
          res_.set_final(s, w);
        else
          {
            const auto& a = *std::get<I>(auts_);
            if (a.is_final(k[I]))
              set_final_<I + 1>(k, s,
                                res_.weightset().mul(w, conv_<I>(a.get_final(k[I]))));
          }
      }

      template <std::size_t I>
      void initials_(key_t& k, const weight_t& w)
      {
        if constexpr (I == n)
          res_.add_initial(state_(k), w);
        else
          for (const auto& [s, v] : std::get<I>(auts_)->initials())
            {
              k[I] = s;
              initials_<I + 1>(k, res_.weightset().mul(w, conv_<I>(v)));
            }
      }

      template <std::size_t I>
      void step_(state_t src, char label, key_t& dst, const weight_t& w)
      {
        if constexpr (I == n)
          res_.add_transition(src, label, state_(dst), w);
        else
          {
            const auto& out = std::get<I>(auts_)->out(dst[I]);
            auto from = dst[I];
            for (auto it = out.lower_bound({label, 0});
                 it != out.end() && it->first.first == label; ++it)
              {
                dst[I] = it->first.second;
                step_<I + 1>(src, label, dst,
                             res_.weightset().mul(w, conv_<I>(it->second)));
              }
            dst[I] = from;
          }
      }

      std::tuple<std::shared_ptr<const Auts>...> auts_;
      res_t res_;
      std::map<key_t, state_t> ids_;
      std::deque<std::pair<key_t, state_t>> todo_;
    };
  }

  /// Synchronized product of one or more automata with free labelsets,
  /// accessible part.  The result context is the join of the operand
  /// contexts; states remember their tuple of operand states.
  template <typename... Auts>
  auto product(const std::shared_ptr<const Auts>&... auts)
  {
    static_assert(sizeof...(Auts) >= 1, "product: empty operand list");
    static_assert((labelset_t_of<context_t_of<Auts>>::is_free() && ...),
                  "requires a free labelset");
    return detail::product_impl<Auts...>{auts...}();
  }
}
