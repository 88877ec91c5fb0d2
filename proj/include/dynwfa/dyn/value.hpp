#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <dynwfa/dyn/symbol.hpp>

// Type-erased values.  A dyn value is a shared handle on an immutable
// (valueset, value) pair; copying it is cheap and aliases the pair.  Its
// sname is the interned static type name of the valueset, which is what
// registries dispatch on.

namespace dynwfa::dyn
{
  struct label_tag {};
  struct weight_tag {};
  struct expression_tag {};
  struct context_tag {};
  struct automaton_tag {};

  /// A valueset with one of its values.
  template <typename ValueSet>
  struct valued
  {
    ValueSet valueset;
    typename ValueSet::value_t value;
  };

  namespace detail
  {
    template <typename Tag, typename T>
    struct payload
    {
      using type = valued<T>;
    };
    template <typename Ctx>
    struct payload<context_tag, Ctx>
    {
      using type = Ctx;
    };
    /// Automata are keyed by their plain type, but the object may be a
    /// decorated automaton deriving from it.
    template <typename Aut>
    struct payload<automaton_tag, Aut>
    {
      using type = std::shared_ptr<const Aut>;
    };

    template <typename T>
    std::string vname_of(const valued<T>& v)
    {
      return v.valueset.vname();
    }
    template <typename T>
    std::string vname_of(const std::shared_ptr<const T>& a)
    {
      return a->vname();
    }
    template <typename T>
    std::string vname_of(const T& ctx)
    {
      return ctx.vname();
    }

    template <typename Tag>
    struct value_base
    {
      virtual ~value_base() = default;
      virtual symbol sname() const = 0;
      virtual std::string vname() const = 0;
    };

    template <typename Tag, typename T>
    struct value_model final : value_base<Tag>
    {
      using payload_t = typename payload<Tag, T>::type;

      explicit value_model(payload_t p) : data(std::move(p)) {}

      static symbol static_sname()
      {
        static const symbol res = intern(T::sname());
        return res;
      }

      symbol sname() const override { return static_sname(); }
      std::string vname() const override { return vname_of(data); }

      payload_t data;
    };
  }

  template <typename Tag>
  class value
  {
  public:
    value() = default;

    template <typename T>
    static value make(typename detail::payload<Tag, T>::type p)
    {
      value res;
      res.impl_ = std::make_shared<const detail::value_model<Tag, T>>(
        std::move(p));
      return res;
    }

    explicit operator bool() const { return bool(impl_); }

    /// The sname of the valueset, interned.
    symbol sname() const { return impl().sname(); }
    /// The name of the valueset including its runtime values.
    std::string vname() const { return impl().vname(); }

    /// Whether both handles share the same pair.
    bool aliases(const value& other) const { return impl_ == other.impl_; }

    /// Downcast.  The registry only calls a bridge with arguments whose
    /// snames match, so release builds skip the check.
    template <typename T>
    const typename detail::payload<Tag, T>::type& as() const
    {
#ifndef NDEBUG
      return checked_as<T>();
#else
      return static_cast<const detail::value_model<Tag, T>&>(impl()).data;
#endif
    }

    /// Downcast, always checked by sname comparison.
    template <typename T>
    const typename detail::payload<Tag, T>::type& checked_as() const
    {
      if (!(impl().sname() == detail::value_model<Tag, T>::static_sname()))
        throw std::logic_error("invalid downcast: value of type "
                               + impl().sname().str() + " used as "
                               + T::sname());
      return static_cast<const detail::value_model<Tag, T>&>(impl()).data;
    }

  private:
    const detail::value_base<Tag>& impl() const
    {
      if (!impl_)
        throw std::logic_error("empty dyn value");
      return *impl_;
    }

    std::shared_ptr<const detail::value_base<Tag>> impl_;
  };

  using label = value<label_tag>;
  using weight = value<weight_tag>;
  using expression = value<expression_tag>;
  using context = value<context_tag>;
  using automaton = value<automaton_tag>;

  template <typename ValueSet>
  label make_label(const ValueSet& vs, typename ValueSet::value_t v)
  {
    return label::make<ValueSet>(valued<ValueSet>{vs, std::move(v)});
  }

  template <typename ValueSet>
  weight make_weight(const ValueSet& vs, typename ValueSet::value_t v)
  {
    return weight::make<ValueSet>(valued<ValueSet>{vs, std::move(v)});
  }

  template <typename ExpSet>
  expression make_expression(const ExpSet& es, typename ExpSet::value_t v)
  {
    return expression::make<ExpSet>(valued<ExpSet>{es, std::move(v)});
  }

  template <typename Ctx>
    requires requires { Ctx::sname(); }
  context make_context(const Ctx& ctx)
  {
    return context::make<Ctx>(ctx);
  }

  /// Wrap an automaton, possibly decorated, under its plain type.
  template <typename Aut>
  automaton make_automaton(Aut&& aut)
  {
    using aut_t = std::decay_t<Aut>;
    using plain_t = typename aut_t::super_or_self_t;
    return automaton::make<plain_t>(
      std::make_shared<const aut_t>(std::forward<Aut>(aut)));
  }

  template <typename Aut>
  automaton make_automaton(std::shared_ptr<const Aut> aut)
  {
    using plain_t = typename Aut::super_or_self_t;
    return automaton::make<plain_t>(std::move(aut));
  }

  /// An unsigned value lifted to a type for dispatch.
  struct integral
  {
    unsigned value;
  };

  /// The sname contributed by an integral.
  inline std::string integral_sname(unsigned v)
  {
    return "integral_constant<unsigned, " + std::to_string(v) + ">";
  }

  using automaton_list = std::vector<automaton>;

  /// Any argument or result of a bridge.  Plain values (bool, unsigned,
  /// string) do not take part in dispatch.
  struct erased
    : std::variant<std::monostate, bool, unsigned, std::string, label, weight,
                   expression, context, automaton, integral, automaton_list>
  {
    using variant::variant;
  };

  /// The signature of a call: the snames of its dyn arguments, in order.
  /// Lists contribute one sname per element.
  inline signature vsignature(std::span<const erased> args)
  {
    signature res;
    for (const auto& a : args)
      std::visit([&](const auto& v) {
          using t = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<t, integral>)
            res.syms.push_back(intern(integral_sname(v.value)));
          else if constexpr (std::is_same_v<t, automaton_list>)
            for (const auto& aut : v)
              res.syms.push_back(aut.sname());
          else if constexpr (std::is_same_v<t, label>
                             || std::is_same_v<t, weight>
                             || std::is_same_v<t, expression>
                             || std::is_same_v<t, context>
                             || std::is_same_v<t, automaton>)
            res.syms.push_back(v.sname());
        }, static_cast<const erased::variant&>(a));
    return res;
  }
}
