#pragma once

#include <memory>
#include <string>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>

namespace dynwfa
{
  /// An automaton whose states remember states of the automata it was
  /// computed from.  The sources are kept alive.
  ///
  /// Subset automata (determinize, brzozowski) print origins as sets,
  /// product automata as tuples, partition automata (moore, signature)
  /// as sets of equivalent states.
  template <typename Context>
  class origin_automaton : public mutable_automaton<Context>
  {
  public:
    using super_t = mutable_automaton<Context>;
    enum class shape
    {
      set,
      tuple,
    };

    origin_automaton(Context ctx, std::string kind, shape sh,
                     std::vector<std::shared_ptr<const void>> sources)
      : super_t(std::move(ctx))
      , kind_(std::move(kind))
      , shape_(sh)
      , sources_(std::move(sources))
    {}

    /// Add a state and record where it came from.
    state_t new_state(std::vector<state_t> origin)
    {
      auto res = super_t::new_state();
      if (origins_.size() <= res)
        origins_.resize(res + 1);
      origins_[res] = std::move(origin);
      return res;
    }

    const std::vector<state_t>& origin(state_t s) const
    {
      static const std::vector<state_t> none;
      return s < origins_.size() ? origins_[s] : none;
    }

    /// "subset", "product", "partition", "brzozowski".
    const std::string& kind() const { return kind_; }

    std::string state_name(state_t s) const override
    {
      const auto& o = origin(s);
      std::string res = shape_ == shape::set ? "{" : "(";
      const char* sep = "";
      for (auto q : o)
        {
          res += sep;
          res += std::to_string(q);
          sep = ", ";
        }
      return res + (shape_ == shape::set ? "}" : ")");
    }

  private:
    std::string kind_;
    shape shape_;
    std::vector<std::vector<state_t>> origins_;
    std::vector<std::shared_ptr<const void>> sources_;
  };

  /// A tupleset-labeled automaton seen through one tape, with the same
  /// state ids as its source.
  template <typename Context, std::size_t Tape>
  class focus_automaton : public mutable_automaton<Context>
  {
  public:
    using super_t = mutable_automaton<Context>;

    focus_automaton(Context ctx, std::shared_ptr<const void> source)
      : super_t(std::move(ctx))
      , source_(std::move(source))
    {}

    static constexpr std::size_t tape() { return Tape; }

  private:
    std::shared_ptr<const void> source_;
  };

  /// Remove the decoration: a plain copy.
  template <typename Context>
  mutable_automaton<Context> strip(const mutable_automaton<Context>& aut)
  {
    return mutable_automaton<Context>(aut);
  }
}
