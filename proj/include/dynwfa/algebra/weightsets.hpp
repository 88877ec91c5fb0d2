#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <dynwfa/algebra/stream.hpp>

namespace dynwfa
{
  namespace detail
  {
    [[noreturn]] inline void unsupported(const std::string& ws,
                                         const std::string& op)
    {
      throw std::domain_error("unsupported operation: " + op + " in " + ws);
    }

    inline std::int64_t read_int(std::istream& is)
    {
      bool neg = false;
      if (is.peek() == '-' || is.peek() == '+')
        neg = is.get() == '-';
      if (!std::isdigit(is.peek()))
        raise_parse_error(is, "expected an integer");
      std::int64_t res = 0;
      while (std::isdigit(is.peek()))
        {
          int d = is.get() - '0';
          if (__builtin_mul_overflow(res, 10, &res)
              || __builtin_add_overflow(res, d, &res))
            raise_parse_error(is, "integer overflow");
        }
      return neg ? -res : res;
    }

    inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
    {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow");
      return r;
    }

    inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
    {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow");
      return r;
    }
  }

  /// The Boolean semiring: or, and.
  class b
  {
  public:
    using value_t = bool;

    static std::string sname() { return "b"; }
    std::string vname() const { return sname(); }
    static b make(std::istream& is) { eat(is, "b"); return {}; }

    static constexpr value_t zero() { return false; }
    static constexpr value_t one() { return true; }
    static constexpr value_t add(value_t l, value_t r) { return l || r; }
    static constexpr value_t mul(value_t l, value_t r) { return l && r; }
    static constexpr bool is_starrable(value_t) { return true; }
    static constexpr value_t star(value_t) { return true; }
    static constexpr bool is_zero(value_t v) { return !v; }
    static constexpr bool is_one(value_t v) { return v; }
    static constexpr bool equal(value_t l, value_t r) { return l == r; }
    static constexpr bool less(value_t l, value_t r) { return l < r; }
    static constexpr bool is_boolean() { return true; }

    static value_t conv(const b&, value_t v) { return v; }

    static std::ostream& print(value_t v, std::ostream& o)
    {
      return o << (v ? '1' : '0');
    }

    static value_t parse(std::istream& is)
    {
      int c = is.get();
      if (c == '0' || c == '1')
        return c == '1';
      raise_parse_error(is, "invalid Boolean weight");
    }

    friend constexpr bool operator==(const b&, const b&) { return true; }
  };

  /// The field with two elements: xor, and.
  class f2
  {
  public:
    using value_t = bool;

    static std::string sname() { return "f2"; }
    std::string vname() const { return sname(); }
    static f2 make(std::istream& is) { eat(is, "f2"); return {}; }

    static constexpr value_t zero() { return false; }
    static constexpr value_t one() { return true; }
    static constexpr value_t add(value_t l, value_t r) { return l != r; }
    static constexpr value_t mul(value_t l, value_t r) { return l && r; }
    static constexpr bool is_starrable(value_t) { return false; }
    static value_t star(value_t) { detail::unsupported(sname(), "star"); }
    static constexpr bool is_zero(value_t v) { return !v; }
    static constexpr bool is_one(value_t v) { return v; }
    static constexpr bool equal(value_t l, value_t r) { return l == r; }
    static constexpr bool less(value_t l, value_t r) { return l < r; }
    static constexpr bool is_boolean() { return false; }

    static value_t conv(const f2&, value_t v) { return v; }

    static std::ostream& print(value_t v, std::ostream& o)
    {
      return o << (v ? '1' : '0');
    }

    static value_t parse(std::istream& is)
    {
      int c = is.get();
      if (c == '0' || c == '1')
        return c == '1';
      raise_parse_error(is, "invalid f2 weight");
    }

    friend constexpr bool operator==(const f2&, const f2&) { return true; }
  };

  /// Integers with the usual operations.
  class z
  {
  public:
    using value_t = std::int64_t;

    static std::string sname() { return "z"; }
    std::string vname() const { return sname(); }
    static z make(std::istream& is) { eat(is, "z"); return {}; }

    static constexpr value_t zero() { return 0; }
    static constexpr value_t one() { return 1; }
    static value_t add(value_t l, value_t r) { return detail::checked_add(l, r); }
    static value_t mul(value_t l, value_t r) { return detail::checked_mul(l, r); }
    static constexpr bool is_starrable(value_t) { return false; }
    static value_t star(value_t) { detail::unsupported(sname(), "star"); }
    static constexpr bool is_zero(value_t v) { return v == 0; }
    static constexpr bool is_one(value_t v) { return v == 1; }
    static constexpr bool equal(value_t l, value_t r) { return l == r; }
    static constexpr bool less(value_t l, value_t r) { return l < r; }
    static constexpr bool is_boolean() { return false; }

    static value_t conv(const z&, value_t v) { return v; }

    static std::ostream& print(value_t v, std::ostream& o) { return o << v; }
    static value_t parse(std::istream& is) { return detail::read_int(is); }

    friend constexpr bool operator==(const z&, const z&) { return true; }
  };

  /// A normalized fraction: gcd(num, den) = 1 and den > 0.
  struct rational
  {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const rational&, const rational&) = default;
  };

  /// Rational numbers.
  class q
  {
  public:
    using value_t = rational;

    static std::string sname() { return "q"; }
    std::string vname() const { return sname(); }
    static q make(std::istream& is) { eat(is, "q"); return {}; }

    static value_t value(std::int64_t num, std::int64_t den = 1)
    {
      if (den == 0)
        throw std::domain_error("q: null denominator");
      if (den < 0)
        {
          num = detail::checked_mul(num, -1);
          den = detail::checked_mul(den, -1);
        }
      auto g = std::gcd(num, den);
      return {num / g, den / g};
    }

    static value_t zero() { return {0, 1}; }
    static value_t one() { return {1, 1}; }

    static value_t add(const value_t& l, const value_t& r)
    {
      auto g = std::gcd(l.den, r.den);
      auto lm = r.den / g;
      auto rm = l.den / g;
      return value(detail::checked_add(detail::checked_mul(l.num, lm),
                                       detail::checked_mul(r.num, rm)),
                   detail::checked_mul(l.den, lm));
    }

    static value_t mul(const value_t& l, const value_t& r)
    {
      // Cross-reduce first to limit overflows.
      auto g1 = std::gcd(l.num, r.den);
      auto g2 = std::gcd(r.num, l.den);
      if (g1 == 0) g1 = 1;
      if (g2 == 0) g2 = 1;
      return value(detail::checked_mul(l.num / g1, r.num / g2),
                   detail::checked_mul(l.den / g2, r.den / g1));
    }

    static constexpr bool is_starrable(const value_t&) { return false; }
    static value_t star(const value_t&) { detail::unsupported(sname(), "star"); }
    static bool is_zero(const value_t& v) { return v.num == 0; }
    static bool is_one(const value_t& v) { return v.num == 1 && v.den == 1; }
    static bool equal(const value_t& l, const value_t& r) { return l == r; }
    static bool less(const value_t& l, const value_t& r)
    {
      return static_cast<__int128>(l.num) * r.den
             < static_cast<__int128>(r.num) * l.den;
    }
    static constexpr bool is_boolean() { return false; }

    static value_t conv(const q&, const value_t& v) { return v; }

    static std::ostream& print(const value_t& v, std::ostream& o)
    {
      o << v.num;
      if (v.den != 1)
        o << '/' << v.den;
      return o;
    }

    static value_t parse(std::istream& is)
    {
      auto num = detail::read_int(is);
      std::int64_t den = 1;
      if (is.peek() == '/')
        {
          is.get();
          den = detail::read_int(is);
          if (den == 0)
            raise_parse_error(is, "null denominator");
        }
      return value(num, den);
    }

    friend constexpr bool operator==(const q&, const q&) { return true; }
  };

  /// A value of the tropical min-plus semiring over integers.
  struct zmin_value
  {
    std::int64_t value = 0;
    bool infinite = false;

    static constexpr zmin_value infinity() { return {0, true}; }
    friend constexpr bool operator==(const zmin_value& l, const zmin_value& r)
    {
      return l.infinite == r.infinite && (l.infinite || l.value == r.value);
    }
  };

  /// Integers with min as addition and + as multiplication.
  class zmin
  {
  public:
    using value_t = zmin_value;

    static std::string sname() { return "zmin"; }
    std::string vname() const { return sname(); }
    static zmin make(std::istream& is) { eat(is, "zmin"); return {}; }

    static constexpr value_t value(std::int64_t v) { return {v, false}; }
    static constexpr value_t zero() { return value_t::infinity(); }
    static constexpr value_t one() { return {0, false}; }

    static value_t add(const value_t& l, const value_t& r)
    {
      if (l.infinite)
        return r;
      if (r.infinite)
        return l;
      return l.value <= r.value ? l : r;
    }

    static value_t mul(const value_t& l, const value_t& r)
    {
      if (l.infinite || r.infinite)
        return zero();
      return value(detail::checked_add(l.value, r.value));
    }

    static constexpr bool is_starrable(const value_t& v)
    {
      return v.infinite || 0 <= v.value;
    }

    static value_t star(const value_t& v)
    {
      if (!is_starrable(v))
        detail::unsupported(sname(), "star of a negative weight");
      return one();
    }

    static constexpr bool is_zero(const value_t& v) { return v.infinite; }
    static constexpr bool is_one(const value_t& v)
    {
      return !v.infinite && v.value == 0;
    }
    static constexpr bool equal(const value_t& l, const value_t& r)
    {
      return l == r;
    }
    static constexpr bool less(const value_t& l, const value_t& r)
    {
      if (l.infinite)
        return false;
      return r.infinite || l.value < r.value;
    }
    static constexpr bool is_boolean() { return false; }

    static value_t conv(const zmin&, const value_t& v) { return v; }

    static std::ostream& print(const value_t& v, std::ostream& o)
    {
      if (v.infinite)
        return o << "oo";
      return o << v.value;
    }

    static value_t parse(std::istream& is)
    {
      if (looking_at(is, "oo"))
        {
          eat(is, "oo");
          return zero();
        }
      return value(detail::read_int(is));
    }

    friend constexpr bool operator==(const zmin&, const zmin&) { return true; }
  };

  template <typename T>
  struct is_weightset : std::false_type {};
  template <> struct is_weightset<b> : std::true_type {};
  template <> struct is_weightset<f2> : std::true_type {};
  template <> struct is_weightset<z> : std::true_type {};
  template <> struct is_weightset<q> : std::true_type {};
  template <> struct is_weightset<zmin> : std::true_type {};

  template <typename T>
  inline constexpr bool is_weightset_v = is_weightset<T>::value;

  /// Whether \a WS is the Boolean semiring (the determinization domain).
  template <typename WS>
  inline constexpr bool is_boolean_v = requires { requires WS::is_boolean(); };

  /// Convenience: print a value into a string.
  template <typename ValueSet, typename Value>
  std::string to_string(const ValueSet& vs, const Value& v)
  {
    std::ostringstream o;
    vs.print(v, o);
    return o.str();
  }

  /// Convenience: parse a full string into a value.
  template <typename ValueSet>
  typename ValueSet::value_t parse_value(const ValueSet& vs,
                                         std::string_view text)
  {
    return parse_all(text, [&](std::istream& is) { return vs.parse(is); });
  }
}
