#pragma once

#include <dynwfa/dyn/bridges/common.hpp>
#include <dynwfa/expressions/expressionset.hpp>

// One registry per printed kind: print_weight, print_label,
// print_expression, print_automaton.

namespace dynwfa::dyn
{
  /// (weight) -> string.
  template <typename WS>
  struct print_weight_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& v = valued_arg<WS, weight_tag>(args, 0);
      return to_string(v.valueset, v.value);
    }
  };

  /// (label) -> string.
  template <typename LS>
  struct print_label_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& v = valued_arg<LS, label_tag>(args, 0);
      return to_string(v.valueset, v.value);
    }
  };

  /// (expression) -> string.
  template <typename ES>
  struct print_expression_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& v = valued_arg<ES, expression_tag>(args, 0);
      return v.valueset.to_string(v.value);
    }
  };

  /// (automaton, format: "text" | "dot") -> string.
  template <typename Aut>
  struct print_automaton_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      const auto& aut = *aut_arg<Aut>(args, 0);
      const auto& format = arg<std::string>(args, 1);
      std::ostringstream o;
      if (format == "text")
        dynwfa::print(aut, o);
      else if (format == "dot")
        print_dot(aut, o);
      else
        throw std::invalid_argument("print: invalid format: " + format
                                    + " (expected text or dot)");
      return o.str();
    }
  };

  /// (automaton) -> unsigned.
  template <typename Aut>
  struct num_states_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      return unsigned(aut_arg<Aut>(args, 0)->num_states());
    }
  };

  /// (automaton) -> automaton, without decoration.
  template <typename Aut>
  struct strip_bridge
  {
    static constexpr const char* unmet = nullptr;

    static erased call(std::span<const erased> args)
    {
      return make_automaton(dynwfa::strip(*aut_arg<Aut>(args, 0)));
    }
  };
}
