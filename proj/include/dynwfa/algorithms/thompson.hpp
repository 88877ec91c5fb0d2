#pragma once

#include <utility>

#include <dynwfa/automata/mutable_automaton.hpp>
#include <dynwfa/expressions/expressionset.hpp>

namespace dynwfa
{
  namespace detail
  {
    template <typename ExpSet>
    class thompson_impl
    {
    public:
      using ctx_t = nullable_context_t<typename ExpSet::context_t>;
      using aut_t = mutable_automaton<ctx_t>;
      using value_t = typename ExpSet::value_t;
      using type_t = rat::type_t;

      explicit thompson_impl(const ExpSet& es)
        : es_(es)
        , res_(make_nullable_context(es.context()))
      {}

      aut_t operator()(const value_t& e)
      {
        auto [i, f] = build_(e);
        res_.set_initial(i);
        res_.set_final(f);
        return std::move(res_);
      }

    private:
      using pair_t = std::pair<state_t, state_t>;

      auto one_() const { return res_.labelset().one(); }

      pair_t build_(const value_t& e)
      {
        const auto& ws = res_.weightset();
        switch (e->type)
          {
          case type_t::zero:
            return {res_.new_state(), res_.new_state()};
          case type_t::one:
            {
              auto i = res_.new_state();
              auto f = res_.new_state();
              res_.add_transition(i, one_(), f, ws.one());
              return {i, f};
            }
          case type_t::atom:
            {
              auto i = res_.new_state();
              auto f = res_.new_state();
              res_.add_transition(i, res_.labelset().letter(e->letter), f,
                                  ws.one());
              return {i, f};
            }
          case type_t::sum:
            {
              auto i = res_.new_state();
              auto f = res_.new_state();
              for (const auto& s : e->subs)
                {
                  auto [si, sf] = build_(s);
                  res_.add_transition(i, one_(), si, ws.one());
                  res_.add_transition(sf, one_(), f, ws.one());
                }
              return {i, f};
            }
          case type_t::prod:
            {
              auto res = build_(e->subs.front());
              for (std::size_t k = 1; k < e->subs.size(); ++k)
                {
                  auto [si, sf] = build_(e->subs[k]);
                  res_.add_transition(res.second, one_(), si, ws.one());
                  res.second = sf;
                }
              return res;
            }
          case type_t::star:
            {
              auto i = res_.new_state();
              auto f = res_.new_state();
              auto [si, sf] = build_(e->subs.front());
              res_.add_transition(i, one_(), si, ws.one());
              res_.add_transition(sf, one_(), si, ws.one());
              res_.add_transition(sf, one_(), f, ws.one());
              res_.add_transition(i, one_(), f, ws.one());
              return {i, f};
            }
          case type_t::lweight:
            {
              auto [si, sf] = build_(e->subs.front());
              // The entry state of a sub-automaton has no incoming
              // transitions: scaling its outgoing ones scales every path.
              auto out = res_.out(si);
              for (const auto& [k, w] : out)
                res_.set_transition(si, k.first, k.second,
                                    ws.mul(e->weight, w));
              return {si, sf};
            }
          }
        throw std::logic_error("thompson: invalid expression");
      }

      const ExpSet& es_;
      aut_t res_;
    };
  }

  /// Thompson automaton of \a e: one initial and one final state,
  /// spontaneous transitions labeled by the empty word.
  template <typename ExpSet>
  auto thompson(const ExpSet& es, const typename ExpSet::value_t& e)
  {
    return detail::thompson_impl<ExpSet>{es}(e);
  }
}
