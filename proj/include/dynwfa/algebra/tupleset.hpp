#pragma once

#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include <dynwfa/algebra/labelsets.hpp>
#include <dynwfa/algebra/weightsets.hpp>

namespace dynwfa
{
  /// Cartesian product of valuesets, all labelsets or all weightsets.
  /// Values are tuples; every operation is component-wise.  Printed
  /// values separate their components with '|'.
  template <typename... ValueSets>
  class tupleset
  {
    static_assert(sizeof...(ValueSets) >= 1, "tupleset: arity must be >= 1");

  public:
    using valuesets_t = std::tuple<ValueSets...>;
    using value_t = std::tuple<typename ValueSets::value_t...>;
    template <std::size_t I>
    using valueset_t = std::tuple_element_t<I, valuesets_t>;
    using indices_t = std::make_index_sequence<sizeof...(ValueSets)>;

    static constexpr std::size_t size() { return sizeof...(ValueSets); }

    explicit tupleset(ValueSets... vss) : sets_(std::move(vss)...) {}
    explicit tupleset(valuesets_t vss) : sets_(std::move(vss)) {}

    static std::string sname()
    {
      std::string res = "tupleset<";
      const char* sep = "";
      ((res += sep, res += ValueSets::sname(), sep = ", "), ...);
      return res + '>';
    }

    std::string vname() const
    {
      std::string res = "tupleset<";
      std::apply([&](const auto&... s) {
          const char* sep = "";
          ((res += sep, res += s.vname(), sep = ", "), ...);
        }, sets_);
      return res + '>';
    }

    static tupleset make(std::istream& is)
    {
      eat(is, "tupleset<");
      auto res = make_(is, indices_t{});
      eat(is, '>');
      return res;
    }

    template <std::size_t I>
    const auto& set() const { return std::get<I>(sets_); }
    const valuesets_t& sets() const { return sets_; }

    // Labelset role.
    static constexpr bool is_free() { return false; }
    static constexpr bool has_one() { return (ValueSets::has_one() && ...); }
    static constexpr bool is_letterized() { return false; }

    static value_t one() { return value_t{ValueSets::one()...}; }

    static bool is_one(const value_t& v)
    {
      return all_(v, [](const auto& vs, const auto& x) {
          return std::decay_t<decltype(vs)>::is_one(x);
        });
    }

    // Weightset role.
    static value_t zero() { return value_t{ValueSets::zero()...}; }

    value_t add(const value_t& l, const value_t& r) const
    {
      return map2_(l, r, [](const auto& vs, const auto& a, const auto& b) {
          return vs.add(a, b);
        });
    }

    value_t mul(const value_t& l, const value_t& r) const
    {
      return map2_(l, r, [](const auto& vs, const auto& a, const auto& b) {
          return vs.mul(a, b);
        });
    }

    bool is_starrable(const value_t& v) const
    {
      return all_(v, [](const auto& vs, const auto& x) {
          return vs.is_starrable(x);
        });
    }

    value_t star(const value_t& v) const
    {
      return map2_(v, v, [](const auto& vs, const auto& a, const auto&) {
          return vs.star(a);
        });
    }

    bool is_zero(const value_t& v) const
    {
      return all_(v, [](const auto& vs, const auto& x) {
          return vs.is_zero(x);
        });
    }

    // Both roles.
    bool equal(const value_t& l, const value_t& r) const
    {
      return equal_(l, r, indices_t{});
    }

    bool less(const value_t& l, const value_t& r) const
    {
      return less_(l, r, indices_t{});
    }

    template <typename... Src>
    value_t conv(const tupleset<Src...>& src,
                 const typename tupleset<Src...>::value_t& v) const
    {
      static_assert(sizeof...(Src) == sizeof...(ValueSets),
                    "invalid conversion");
      return conv_(src, v, indices_t{});
    }

    std::ostream& print(const value_t& v, std::ostream& o) const
    {
      print_(v, o, indices_t{});
      return o;
    }

    value_t parse(std::istream& is) const
    {
      return parse_(is, indices_t{});
    }

    friend bool operator==(const tupleset&, const tupleset&) = default;

  private:
    template <std::size_t... I>
    static tupleset make_(std::istream& is, std::index_sequence<I...>)
    {
      // Braced initialization guarantees left-to-right evaluation.
      return tupleset{valuesets_t{make_one_<I>(is)...}};
    }

    template <std::size_t I>
    static valueset_t<I> make_one_(std::istream& is)
    {
      if constexpr (I != 0)
        eat(is, ", ");
      return valueset_t<I>::make(is);
    }

    template <typename Pred>
    bool all_(const value_t& v, Pred pred) const
    {
      return all_impl_(v, pred, indices_t{});
    }

    template <typename Pred, std::size_t... I>
    bool all_impl_(const value_t& v, Pred pred, std::index_sequence<I...>) const
    {
      return (pred(std::get<I>(sets_), std::get<I>(v)) && ...);
    }

    template <typename Fun>
    value_t map2_(const value_t& l, const value_t& r, Fun fun) const
    {
      return map2_impl_(l, r, fun, indices_t{});
    }

    template <typename Fun, std::size_t... I>
    value_t map2_impl_(const value_t& l, const value_t& r, Fun fun,
                       std::index_sequence<I...>) const
    {
      return value_t{fun(std::get<I>(sets_), std::get<I>(l), std::get<I>(r))...};
    }

    template <std::size_t... I>
    bool equal_(const value_t& l, const value_t& r,
                std::index_sequence<I...>) const
    {
      return (std::get<I>(sets_).equal(std::get<I>(l), std::get<I>(r)) && ...);
    }

    template <std::size_t... I>
    bool less_(const value_t& l, const value_t& r,
               std::index_sequence<I...>) const
    {
      int res = 0;
      auto step = [&](const auto& vs, const auto& a, const auto& b) {
        if (res == 0)
          res = vs.less(a, b) ? -1 : vs.less(b, a) ? 1 : 0;
      };
      (step(std::get<I>(sets_), std::get<I>(l), std::get<I>(r)), ...);
      return res < 0;
    }

    template <typename Src, typename V, std::size_t... I>
    value_t conv_(const Src& src, const V& v, std::index_sequence<I...>) const
    {
      return value_t{conv_component_(std::get<I>(sets_), src.template set<I>(),
                                     std::get<I>(v))...};
    }

    template <typename Dst, typename S, typename V>
    static auto conv_component_(const Dst& dst, const S& src, const V& v);

    template <std::size_t... I>
    void print_(const value_t& v, std::ostream& o,
                std::index_sequence<I...>) const
    {
      const char* sep = "";
      ((o << sep, std::get<I>(sets_).print(std::get<I>(v), o), sep = "|"), ...);
    }

    template <std::size_t... I>
    value_t parse_(std::istream& is, std::index_sequence<I...>) const
    {
      return value_t{parse_one_<I>(is)...};
    }

    template <std::size_t I>
    auto parse_one_(std::istream& is) const
    {
      if constexpr (I != 0)
        eat(is, '|');
      return std::get<I>(sets_).parse(is);
    }

    valuesets_t sets_;
  };

  template <typename T>
  struct is_tupleset : std::false_type {};
  template <typename... T>
  struct is_tupleset<tupleset<T...>> : std::true_type {};
  template <typename T>
  inline constexpr bool is_tupleset_v = is_tupleset<T>::value;

  template <typename... T>
  struct is_weightset<tupleset<T...>>
    : std::bool_constant<(is_weightset_v<T> && ...)> {};
}
