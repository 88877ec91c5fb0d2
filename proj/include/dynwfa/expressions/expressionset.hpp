#pragma once

#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <dynwfa/algebra/context.hpp>

namespace dynwfa
{
  namespace rat
  {
    enum class type_t
    {
      zero,
      one,
      atom,
      sum,
      prod,
      star,
      lweight,
    };
  }

  /// Rational expressions over a letter-based context.
  ///
  /// Values are immutable trees shared through shared_ptr.  The
  /// constructors (add, mul, star, lweight) apply the trivial identities,
  /// so two expressions built the same way compare equal structurally.
  template <typename Context>
  class expressionset
  {
  public:
    using context_t = Context;
    using labelset_t = labelset_t_of<Context>;
    using weightset_t = weightset_t_of<Context>;
    using weight_t = typename weightset_t::value_t;
    using label_t = typename labelset_t::value_t;
    using type_t = rat::type_t;

    static_assert(is_letter_based_v<labelset_t>,
                  "requires a letter-based labelset");

    struct node
    {
      type_t type;
      char letter = 0;
      weight_t weight{};
      std::vector<std::shared_ptr<const node>> subs;
    };
    using value_t = std::shared_ptr<const node>;

    explicit expressionset(Context ctx) : ctx_(std::move(ctx)) {}

    static std::string sname()
    {
      return "expressionset<" + Context::sname() + ">";
    }
    std::string vname() const { return "expressionset<" + ctx_.vname() + ">"; }

    const Context& context() const { return ctx_; }
    const labelset_t& labelset() const { return ctx_.labelset(); }
    const weightset_t& weightset() const { return ctx_.weightset(); }

    value_t zero() const { return leaf_(type_t::zero); }
    value_t one() const { return leaf_(type_t::one); }

    value_t atom(char c) const
    {
      if (!labelset().has(c))
        detail::invalid_letter(labelset(), c);
      auto res = std::make_shared<node>();
      res->type = type_t::atom;
      res->letter = c;
      return res;
    }

    /// The expression denoting a single label.
    value_t label(const label_t& l) const
    {
      if constexpr (std::is_same_v<label_t, char>)
        return atom(l);
      else if constexpr (std::is_same_v<label_t, std::string>)
        {
          auto res = one();
          for (char c : l)
            res = mul(res, atom(c));
          return res;
        }
      else
        return l ? atom(*l) : one();
    }

    value_t add(const value_t& l, const value_t& r) const
    {
      if (l->type == type_t::zero)
        return r;
      if (r->type == type_t::zero)
        return l;
      return nary_(type_t::sum, l, r);
    }

    value_t mul(const value_t& l, const value_t& r) const
    {
      if (l->type == type_t::zero || r->type == type_t::zero)
        return zero();
      if (l->type == type_t::one)
        return r;
      if (r->type == type_t::one)
        return l;
      return nary_(type_t::prod, l, r);
    }

    value_t star(const value_t& e) const
    {
      auto res = std::make_shared<node>();
      res->type = type_t::star;
      res->subs.push_back(e);
      return res;
    }

    value_t lweight(const weight_t& w, const value_t& e) const
    {
      const auto& ws = weightset();
      if (ws.is_zero(w) || e->type == type_t::zero)
        return zero();
      if (ws.is_one(w))
        return e;
      auto res = std::make_shared<node>();
      res->type = type_t::lweight;
      if (e->type == type_t::lweight)
        {
          res->weight = ws.mul(w, e->weight);
          if (ws.is_zero(res->weight))
            return zero();
          if (ws.is_one(res->weight))
            return e->subs.front();
          res->subs.push_back(e->subs.front());
        }
      else
        {
          res->weight = w;
          res->subs.push_back(e);
        }
      return res;
    }

    bool equal(const value_t& l, const value_t& r) const
    {
      if (l == r)
        return true;
      if (l->type != r->type || l->subs.size() != r->subs.size())
        return false;
      switch (l->type)
        {
        case type_t::atom:
          return l->letter == r->letter;
        case type_t::lweight:
          if (!weightset().equal(l->weight, r->weight))
            return false;
          break;
        default:
          break;
        }
      for (std::size_t i = 0; i < l->subs.size(); ++i)
        if (!equal(l->subs[i], r->subs[i]))
          return false;
      return true;
    }

    std::ostream& print(const value_t& e, std::ostream& o) const
    {
      print_(e, o, prec::sum);
      return o;
    }

    std::string to_string(const value_t& e) const
    {
      std::ostringstream o;
      print(e, o);
      return o.str();
    }

    value_t parse(std::istream& is) const
    {
      skip_spaces(is);
      if (is.peek() == std::char_traits<char>::eof())
        raise_parse_error(is, "expected an expression");
      auto res = parse_sum_(is);
      skip_spaces(is);
      return res;
    }

    value_t parse(std::string_view text) const
    {
      return parse_all(text, [this](std::istream& is) { return parse(is); });
    }

  private:
    enum class prec
    {
      sum,
      prod,
      unary,
      postfix,
    };

    static value_t leaf_(type_t t)
    {
      auto res = std::make_shared<node>();
      res->type = t;
      return res;
    }

    static value_t nary_(type_t t, const value_t& l, const value_t& r)
    {
      auto res = std::make_shared<node>();
      res->type = t;
      for (const auto& e : {l, r})
        if (e->type == t)
          res->subs.insert(res->subs.end(), e->subs.begin(), e->subs.end());
        else
          res->subs.push_back(e);
      return res;
    }

    /// A sum of plain letters prints as a class.
    static bool is_class_(const value_t& e)
    {
      if (e->type != type_t::sum)
        return false;
      for (const auto& s : e->subs)
        if (s->type != type_t::atom)
          return false;
      return true;
    }

    void print_(const value_t& e, std::ostream& o, prec p) const
    {
      switch (e->type)
        {
        case type_t::zero:
          o << "\\z";
          break;
        case type_t::one:
          o << "\\e";
          break;
        case type_t::atom:
          detail::print_letter(e->letter, o);
          break;
        case type_t::sum:
          if (is_class_(e))
            {
              o << '[';
              for (const auto& s : e->subs)
                detail::print_letter(s->letter, o);
              o << ']';
            }
          else
            {
              bool parens = prec::sum < p;
              if (parens)
                o << '(';
              const char* sep = "";
              for (const auto& s : e->subs)
                {
                  o << sep;
                  print_(s, o, prec::prod);
                  sep = "+";
                }
              if (parens)
                o << ')';
            }
          break;
        case type_t::prod:
          {
            bool parens = prec::prod < p;
            if (parens)
              o << '(';
            for (const auto& s : e->subs)
              print_(s, o, prec::unary);
            if (parens)
              o << ')';
          }
          break;
        case type_t::lweight:
          {
            bool parens = prec::unary < p;
            if (parens)
              o << '(';
            o << '<';
            weightset().print(e->weight, o);
            o << '>';
            print_(e->subs.front(), o, prec::unary);
            if (parens)
              o << ')';
          }
          break;
        case type_t::star:
          print_(e->subs.front(), o, prec::postfix);
          o << '*';
          break;
        }
    }

    static bool starts_unary_(std::istream& is)
    {
      int c = is.peek();
      if (c == std::char_traits<char>::eof())
        return false;
      if (c == '(' || c == '[' || c == '<' || c == '\\')
        return true;
      return is_valid_letter(char(c)) && !detail::needs_label_escape(char(c));
    }

    value_t parse_sum_(std::istream& is) const
    {
      auto res = parse_prod_(is);
      skip_spaces(is);
      while (is.peek() == '+')
        {
          is.get();
          res = add(res, parse_prod_(is));
          skip_spaces(is);
        }
      return res;
    }

    value_t parse_prod_(std::istream& is) const
    {
      auto res = parse_unary_(is);
      skip_spaces(is);
      while (starts_unary_(is))
        {
          res = mul(res, parse_unary_(is));
          skip_spaces(is);
        }
      return res;
    }

    value_t parse_unary_(std::istream& is) const
    {
      skip_spaces(is);
      if (is.peek() == '<')
        {
          is.get();
          auto w = weightset().parse(is);
          eat(is, '>');
          return lweight(w, parse_unary_(is));
        }
      auto res = parse_primary_(is);
      skip_spaces(is);
      while (is.peek() == '*')
        {
          is.get();
          res = star(res);
          skip_spaces(is);
        }
      return res;
    }

    value_t parse_primary_(std::istream& is) const
    {
      skip_spaces(is);
      int c = is.peek();
      if (c == '(')
        {
          is.get();
          auto res = parse_sum_(is);
          skip_spaces(is);
          eat(is, ')');
          return res;
        }
      if (c == '[')
        {
          is.get();
          value_t res = zero();
          bool empty = true;
          while (is.peek() != ']')
            {
              auto l = detail::read_letter(is);
              if (!l)
                raise_parse_error(is, "invalid letter class");
              res = add(res, atom(*l));
              empty = false;
            }
          is.get();
          if (empty)
            raise_parse_error(is, "empty letter class");
          return res;
        }
      if (looking_at(is, "\\e"))
        {
          eat(is, "\\e");
          return one();
        }
      if (looking_at(is, "\\z"))
        {
          eat(is, "\\z");
          return zero();
        }
      auto l = detail::read_letter(is);
      if (!l)
        raise_parse_error(is, c == std::char_traits<char>::eof()
                              ? "unexpected end of expression"
                              : "unexpected character '"
                                  + std::string(1, char(c)) + "'");
      return atom(*l);
    }

    Context ctx_;
  };

  template <typename Context>
  auto make_expressionset(const Context& ctx)
  {
    return expressionset<Context>{ctx};
  }
}
