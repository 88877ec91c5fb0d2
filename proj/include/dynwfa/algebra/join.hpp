#pragma once

#include <dynwfa/algebra/labelsets.hpp>
#include <dynwfa/algebra/tupleset.hpp>
#include <dynwfa/algebra/weightsets.hpp>

// The subtype lattice:
//   z <= q
//   letterset<A> <= nullableset<letterset<A>> <= wordset<A>
//   alphabet inclusion within each labelset kind
//   tuplesets and contexts component-wise.
// b, f2 and zmin are only comparable with themselves.

namespace dynwfa
{
  /// join_impl<A, B>::join(a, b) computes the least common supertype.
  /// Left undefined for incomparable pairs.
  template <typename A, typename B>
  struct join_impl;

  template <typename A, typename B>
  inline constexpr bool has_join_v
    = requires(const A& a, const B& b) { join_impl<A, B>::join(a, b); };

  template <typename A, typename B>
  auto join(const A& a, const B& b)
  {
    static_assert(has_join_v<A, B>, "no join");
    return join_impl<A, B>::join(a, b);
  }

  template <typename A, typename B>
  using join_t = decltype(join(std::declval<const A&>(),
                               std::declval<const B&>()));

  template <typename A>
  A join(const A& a)
  {
    return a;
  }

  template <typename A, typename B, typename C, typename... Rest>
  auto join(const A& a, const B& b, const C& c, const Rest&... rest)
  {
    return join(join(a, b), c, rest...);
  }

  // Weightsets.
#define DYNWFA_JOIN_SELF(WS)                                            \
  template <>                                                           \
  struct join_impl<WS, WS>                                              \
  {                                                                     \
    static WS join(const WS&, const WS&) { return {}; }                 \
  }
  DYNWFA_JOIN_SELF(b);
  DYNWFA_JOIN_SELF(f2);
  DYNWFA_JOIN_SELF(z);
  DYNWFA_JOIN_SELF(q);
  DYNWFA_JOIN_SELF(zmin);
#undef DYNWFA_JOIN_SELF

  template <>
  struct join_impl<z, q>
  {
    static q join(const z&, const q&) { return {}; }
  };

  template <>
  struct join_impl<q, z>
  {
    static q join(const q&, const z&) { return {}; }
  };

  // Labelsets.
  template <typename L>
  struct join_impl<letterset<L>, letterset<L>>
  {
    static letterset<L> join(const letterset<L>& a, const letterset<L>& b)
    {
      return letterset<L>{a.generators().join(b.generators())};
    }
  };

  template <typename L>
  struct join_impl<wordset<L>, wordset<L>>
  {
    static wordset<L> join(const wordset<L>& a, const wordset<L>& b)
    {
      return wordset<L>{a.generators().join(b.generators())};
    }
  };

  template <typename LS>
  struct join_impl<nullableset<LS>, nullableset<LS>>
  {
    static nullableset<LS> join(const nullableset<LS>& a,
                                const nullableset<LS>& b)
    {
      return nullableset<LS>{LS{a.generators().join(b.generators())}};
    }
  };

  namespace detail
  {
    /// Join of labelsets of different kinds: the result is of kind \a To.
    template <typename To, typename A, typename B>
    struct join_into
    {
      static To join(const A& a, const B& b)
      {
        return To{a.generators().join(b.generators())};
      }
    };
  }

  template <typename L>
  struct join_impl<letterset<L>, nullableset<letterset<L>>>
    : detail::join_into<nullableset<letterset<L>>, letterset<L>,
                        nullableset<letterset<L>>> {};
  template <typename L>
  struct join_impl<nullableset<letterset<L>>, letterset<L>>
    : detail::join_into<nullableset<letterset<L>>, nullableset<letterset<L>>,
                        letterset<L>> {};
  template <typename L>
  struct join_impl<letterset<L>, wordset<L>>
    : detail::join_into<wordset<L>, letterset<L>, wordset<L>> {};
  template <typename L>
  struct join_impl<wordset<L>, letterset<L>>
    : detail::join_into<wordset<L>, wordset<L>, letterset<L>> {};
  template <typename L>
  struct join_impl<nullableset<letterset<L>>, wordset<L>>
    : detail::join_into<wordset<L>, nullableset<letterset<L>>, wordset<L>> {};
  template <typename L>
  struct join_impl<wordset<L>, nullableset<letterset<L>>>
    : detail::join_into<wordset<L>, wordset<L>, nullableset<letterset<L>>> {};

  // Tuplesets.
  template <typename... As, typename... Bs>
    requires (sizeof...(As) == sizeof...(Bs) && (has_join_v<As, Bs> && ...))
  struct join_impl<tupleset<As...>, tupleset<Bs...>>
  {
    static auto join(const tupleset<As...>& a, const tupleset<Bs...>& b)
    {
      return join_(a, b, std::make_index_sequence<sizeof...(As)>{});
    }

    template <std::size_t... I>
    static auto join_(const tupleset<As...>& a, const tupleset<Bs...>& b,
                      std::index_sequence<I...>)
    {
      using res_t = tupleset<join_t<As, Bs>...>;
      return res_t{dynwfa::join(a.template set<I>(), b.template set<I>())...};
    }
  };

  /*------.
  | conv. |
  `------*/

  /// conv_impl<To, From>::conv(to, from, v) embeds v into a supertype.
  template <typename To, typename From>
  struct conv_impl;

  template <typename To, typename From>
  inline constexpr bool has_conv_v
    = requires(const To& t, const From& f, const typename From::value_t& v) {
        conv_impl<To, From>::conv(t, f, v);
      };

  /// Convert \a v, a value of \a from, into a value of \a to.
  template <typename To, typename From>
  typename To::value_t conv(const To& to, const From& from,
                            const typename From::value_t& v)
  {
    static_assert(has_conv_v<To, From>, "invalid conversion");
    return conv_impl<To, From>::conv(to, from, v);
  }

  /// Same type: delegate to the valueset (alphabet checks).
  template <typename VS>
    requires (!is_tupleset_v<VS>)
  struct conv_impl<VS, VS>
  {
    static typename VS::value_t conv(const VS& to, const VS& from,
                                     const typename VS::value_t& v)
    {
      return to.conv(from, v);
    }
  };

  template <>
  struct conv_impl<q, z>
  {
    static rational conv(const q&, const z&, std::int64_t v)
    {
      return q::value(v);
    }
  };

  template <typename L>
  struct conv_impl<nullableset<letterset<L>>, letterset<L>>
  {
    using to_t = nullableset<letterset<L>>;
    static typename to_t::value_t conv(const to_t& to, const letterset<L>& from,
                                       char v)
    {
      return to.labelset().conv(from, v);
    }
  };

  template <typename L>
  struct conv_impl<wordset<L>, letterset<L>>
  {
    static std::string conv(const wordset<L>& to, const letterset<L>& from,
                            char v)
    {
      return to.conv(wordset<L>{from.generators()}, std::string(1, v));
    }
  };

  template <typename L>
  struct conv_impl<wordset<L>, nullableset<letterset<L>>>
  {
    using from_t = nullableset<letterset<L>>;
    static std::string conv(const wordset<L>& to, const from_t& from,
                            const typename from_t::value_t& v)
    {
      if (!v)
        return to.one();
      return conv_impl<wordset<L>, letterset<L>>::conv(to, from.labelset(), *v);
    }
  };

  template <typename... Ts, typename... Fs>
    requires (sizeof...(Ts) == sizeof...(Fs) && (has_conv_v<Ts, Fs> && ...))
  struct conv_impl<tupleset<Ts...>, tupleset<Fs...>>
  {
    static auto conv(const tupleset<Ts...>& to, const tupleset<Fs...>& from,
                     const typename tupleset<Fs...>::value_t& v)
    {
      return to.conv(from, v);
    }
  };

  template <typename... ValueSets>
  template <typename Dst, typename S, typename V>
  auto tupleset<ValueSets...>::conv_component_(const Dst& dst, const S& src,
                                               const V& v)
  {
    return dynwfa::conv(dst, src, v);
  }
}
