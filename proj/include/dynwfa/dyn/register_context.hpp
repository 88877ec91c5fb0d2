#pragma once

#include <utility>

#include <dynwfa/dyn/bridges/add_weights.hpp>
#include <dynwfa/dyn/bridges/determinize.hpp>
#include <dynwfa/dyn/bridges/evaluate.hpp>
#include <dynwfa/dyn/bridges/focus.hpp>
#include <dynwfa/dyn/bridges/is_proper.hpp>
#include <dynwfa/dyn/bridges/make_context.hpp>
#include <dynwfa/dyn/bridges/make_expression.hpp>
#include <dynwfa/dyn/bridges/make_weight.hpp>
#include <dynwfa/dyn/bridges/minimize.hpp>
#include <dynwfa/dyn/bridges/print.hpp>
#include <dynwfa/dyn/bridges/product.hpp>
#include <dynwfa/dyn/bridges/proper.hpp>
#include <dynwfa/dyn/bridges/read_automaton.hpp>
#include <dynwfa/dyn/bridges/thompson.hpp>
#include <dynwfa/dyn/bridges/to_expression.hpp>
#include <dynwfa/dyn/bridges/union.hpp>

// register_functions: every algorithm whose static preconditions hold for
// a context kind is registered; the others are reported as skipped.

namespace dynwfa::dyn
{
  /// make_weight, print_weight and add_weights for one weightset.
  template <typename WS>
  void register_weightset()
  {
    register_one<make_weight_bridge, WS>("make_weight");
    register_one<print_weight_bridge, WS>("print_weight");
    register_one<add_weights_bridge, WS, WS>("add_weights");
  }

  namespace detail
  {
    template <typename Aut, unsigned... I>
    void register_focus(std::integer_sequence<unsigned, I...>)
    {
      (register_one<focus_bridge, Aut, std::integral_constant<unsigned, I>>(
         "focus"),
       ...);
    }
  }

  /// All the algorithms for automata of context \a Ctx.
  template <typename Ctx>
  void register_algorithms()
  {
    using ls_t = labelset_t_of<Ctx>;
    using ws_t = weightset_t_of<Ctx>;
    using aut_t = mutable_automaton<Ctx>;

    register_one<make_context_bridge, Ctx>("make_context");
    register_one<read_automaton_bridge, Ctx>("read_automaton");
    register_weightset<ws_t>();
    register_one<print_label_bridge, ls_t>("print_label");
    register_one<print_automaton_bridge, aut_t>("print_automaton");
    register_one<num_states_bridge, aut_t>("num_states");
    register_one<strip_bridge, aut_t>("strip");
    register_one<is_proper_bridge, aut_t>("is_proper");
    register_one<proper_bridge, aut_t>("proper");
    register_one<determinize_bridge, aut_t>("determinize");
    register_one<minimize_bridge, aut_t>("minimize");
    register_one<product_bridge, aut_t>("product");
    register_one<product_bridge, aut_t, aut_t>("product");
    register_one<product_bridge, aut_t, aut_t, aut_t>("product");
    register_one<union_bridge, aut_t, aut_t>("union");
    register_one<to_expression_bridge, aut_t>("to_expression");

    if constexpr (is_letter_based_v<ls_t>)
      {
        using es_t = expressionset<Ctx>;
        using word_t = word_labelset_t<ls_t>;
        register_one<make_expression_bridge, Ctx>("make_expression");
        register_one<print_expression_bridge, es_t>("print_expression");
        register_one<thompson_bridge, es_t>("thompson");
        register_one<print_label_bridge, word_t>("print_label");
        register_one<evaluate_bridge, aut_t, word_t>("evaluate");
      }
    else
      {
        const char* why = "requires a letter-based labelset";
        auto sig = signature_of<Ctx>();
        report_skip("make_expression", sig, why);
        report_skip("thompson", sig, why);
        report_skip("evaluate", signature_of<aut_t>(), why);
      }

    if constexpr (is_tupleset_v<ls_t>)
      detail::register_focus<aut_t>(
        std::make_integer_sequence<unsigned, unsigned(ls_t::size())>{});
    else
      report_skip("focus", signature_of<aut_t>(),
                  "requires a tupleset labelset");
  }

  /// register_algorithms for \a Ctx and for the contexts its algorithms
  /// produce: the nullable one (thompson) and the free one (proper).
  template <typename Ctx>
  void register_context()
  {
    using ls_t = labelset_t_of<Ctx>;
    using ws_t = weightset_t_of<Ctx>;
    register_algorithms<Ctx>();
    if constexpr (is_letter_based_v<ls_t>)
      {
        using nullable_t = dynwfa::context<dynwfa::nullable_t<ls_t>, ws_t>;
        if constexpr (!std::is_same_v<nullable_t, Ctx>)
          register_algorithms<nullable_t>();
      }
    if constexpr (has_free_v<ls_t>)
      {
        using free_t = dynwfa::context<dynwfa::free_t<ls_t>, ws_t>;
        if constexpr (!std::is_same_v<free_t, Ctx>)
          register_algorithms<free_t>();
      }
  }
}
