#pragma once

#include <memory>
#include <string>

#include <dynwfa/algebra/join.hpp>
#include <dynwfa/algebra/labelsets.hpp>
#include <dynwfa/algebra/tupleset.hpp>
#include <dynwfa/algebra/weightsets.hpp>

namespace dynwfa
{
  /// A labelset and a weightset: the full type of an automaton.
  template <typename LabelSet, typename WeightSet>
  class context
  {
  public:
    using labelset_t = LabelSet;
    using weightset_t = WeightSet;
    using label_t = typename LabelSet::value_t;
    using weight_t = typename WeightSet::value_t;

    context(LabelSet ls, WeightSet ws = {})
      : ls_(std::make_shared<const LabelSet>(std::move(ls)))
      , ws_(std::make_shared<const WeightSet>(std::move(ws)))
    {}

    static std::string sname()
    {
      return "context<" + LabelSet::sname() + ", " + WeightSet::sname() + ">";
    }

    std::string vname() const
    {
      return "context<" + ls_->vname() + ", " + ws_->vname() + ">";
    }

    static context make(std::istream& is)
    {
      eat(is, "context<");
      auto ls = LabelSet::make(is);
      eat(is, ", ");
      auto ws = WeightSet::make(is);
      eat(is, '>');
      return {std::move(ls), std::move(ws)};
    }

    static context make(std::string_view vname)
    {
      return parse_all(vname, [](std::istream& is) { return make(is); });
    }

    const LabelSet& labelset() const { return *ls_; }
    const WeightSet& weightset() const { return *ws_; }

    friend bool operator==(const context& l, const context& r)
    {
      return *l.ls_ == *r.ls_ && *l.ws_ == *r.ws_;
    }

  private:
    std::shared_ptr<const LabelSet> ls_;
    std::shared_ptr<const WeightSet> ws_;
  };

  template <typename L1, typename W1, typename L2, typename W2>
    requires (has_join_v<L1, L2> && has_join_v<W1, W2>)
  struct join_impl<context<L1, W1>, context<L2, W2>>
  {
    static auto join(const context<L1, W1>& a, const context<L2, W2>& b)
    {
      using res_t = context<join_t<L1, L2>, join_t<W1, W2>>;
      return res_t{dynwfa::join(a.labelset(), b.labelset()),
                   dynwfa::join(a.weightset(), b.weightset())};
    }
  };

  template <typename Ctx>
  using labelset_t_of = typename Ctx::labelset_t;
  template <typename Ctx>
  using weightset_t_of = typename Ctx::weightset_t;

  /*-------------------------------------------------.
  | Derived labelsets: nullable and free companions. |
  `-------------------------------------------------*/

  template <typename LS>
  struct nullable_of;
  template <typename L>
  struct nullable_of<letterset<L>>
  {
    using type = nullableset<letterset<L>>;
    static type make(const letterset<L>& ls) { return type{ls}; }
  };
  template <typename LS>
  struct nullable_of<nullableset<LS>>
  {
    using type = nullableset<LS>;
    static type make(const type& ls) { return ls; }
  };
  template <typename L>
  struct nullable_of<wordset<L>>
  {
    using type = wordset<L>;
    static type make(const type& ls) { return ls; }
  };

  /// The labelset with the empty word added (identity if already there).
  template <typename LS>
  using nullable_t = typename nullable_of<LS>::type;

  template <typename LS>
  struct free_of {};
  template <typename L>
  struct free_of<letterset<L>>
  {
    using type = letterset<L>;
    static type make(const type& ls) { return ls; }
  };
  template <typename LS>
  struct free_of<nullableset<LS>>
  {
    using type = LS;
    static type make(const nullableset<LS>& ls) { return ls.labelset(); }
  };

  template <typename LS>
  inline constexpr bool has_free_v = requires { typename free_of<LS>::type; };

  /// The labelset without the empty word.
  template <typename LS>
  using free_t = typename free_of<LS>::type;

  template <typename Ctx>
  using nullable_context_t
    = context<nullable_t<labelset_t_of<Ctx>>, weightset_t_of<Ctx>>;

  template <typename Ctx>
  auto make_nullable_context(const Ctx& ctx)
  {
    using ls_t = labelset_t_of<Ctx>;
    return nullable_context_t<Ctx>{nullable_of<ls_t>::make(ctx.labelset()),
                                   ctx.weightset()};
  }

  template <typename Ctx>
  auto make_free_context(const Ctx& ctx)
  {
    using ls_t = labelset_t_of<Ctx>;
    using res_t = context<free_t<ls_t>, weightset_t_of<Ctx>>;
    return res_t{free_of<ls_t>::make(ctx.labelset()), ctx.weightset()};
  }

  /// The wordset over the generators of a letter-based labelset.
  template <typename LS>
  auto make_wordset(const LS& ls)
  {
    return wordset<typename LS::letters_t>{ls.generators()};
  }

  template <typename LS>
  using word_labelset_t = wordset<typename LS::letters_t>;
}
