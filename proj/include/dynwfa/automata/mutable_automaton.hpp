#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <dynwfa/algebra/context.hpp>

namespace dynwfa
{
  using state_t = unsigned;

  /// Weighted automaton with dense state ids.
  ///
  /// Ids are never reused: deleting a state leaves a hole.  Transitions
  /// are unique per (src, label, dst); adding one that exists adds the
  /// weights, and a transition whose weight becomes zero is removed.
  template <typename Context>
  class mutable_automaton
  {
  public:
    using context_t = Context;
    /// The undecorated type, also for derived decorated automata.
    using super_or_self_t = mutable_automaton;
    using labelset_t = labelset_t_of<Context>;
    using weightset_t = weightset_t_of<Context>;
    using label_t = typename labelset_t::value_t;
    using weight_t = typename weightset_t::value_t;
    /// Outgoing transitions of a state, ordered by (label, dst).
    using out_map_t = std::map<std::pair<label_t, state_t>, weight_t>;
    /// Incoming transitions of a state, as (src, label).
    using in_set_t = std::set<std::pair<state_t, label_t>>;

    struct transition
    {
      state_t src;
      label_t label;
      state_t dst;
      weight_t weight;
    };

    explicit mutable_automaton(Context ctx) : ctx_(std::move(ctx)) {}
    mutable_automaton(const mutable_automaton&) = default;
    mutable_automaton(mutable_automaton&&) = default;
    mutable_automaton& operator=(const mutable_automaton&) = default;
    mutable_automaton& operator=(mutable_automaton&&) = default;
    virtual ~mutable_automaton() = default;

    static std::string sname()
    {
      return "mutable_automaton<" + Context::sname() + ">";
    }
    std::string vname() const
    {
      return "mutable_automaton<" + ctx_.vname() + ">";
    }

    const Context& context() const { return ctx_; }
    const labelset_t& labelset() const { return ctx_.labelset(); }
    const weightset_t& weightset() const { return ctx_.weightset(); }

    /// Description of a state for display, empty when undecorated.
    virtual std::string state_name(state_t) const { return {}; }

    /*---------.
    | States.  |
    `---------*/

    state_t new_state()
    {
      alive_.push_back(true);
      out_.emplace_back();
      in_.emplace_back();
      ++num_states_;
      return state_t(alive_.size() - 1);
    }

    bool has_state(state_t s) const { return s < alive_.size() && alive_[s]; }

    /// Number of live states.
    std::size_t num_states() const { return num_states_; }

    /// One past the largest id ever allocated.
    state_t state_bound() const { return state_t(alive_.size()); }

    std::vector<state_t> states() const
    {
      std::vector<state_t> res;
      res.reserve(num_states_);
      for (state_t s = 0; s < alive_.size(); ++s)
        if (alive_[s])
          res.push_back(s);
      return res;
    }

    void del_state(state_t s)
    {
      require_(s);
      auto outs = out_[s];
      for (const auto& [k, w] : outs)
        del_transition(s, k.first, k.second);
      auto ins = in_[s];
      for (const auto& [src, l] : ins)
        del_transition(src, l, s);
      initial_.erase(s);
      final_.erase(s);
      alive_[s] = false;
      --num_states_;
    }

    /*-------------------.
    | Initial and final. |
    `-------------------*/

    void set_initial(state_t s, const weight_t& w)
    {
      set_weight_(initial_, s, w);
    }
    void set_initial(state_t s) { set_initial(s, weightset().one()); }
    void add_initial(state_t s, const weight_t& w)
    {
      set_initial(s, weightset().add(get_initial(s), w));
    }
    weight_t get_initial(state_t s) const { return get_weight_(initial_, s); }
    bool is_initial(state_t s) const { return initial_.count(s); }
    const std::map<state_t, weight_t>& initials() const { return initial_; }

    void set_final(state_t s, const weight_t& w) { set_weight_(final_, s, w); }
    void set_final(state_t s) { set_final(s, weightset().one()); }
    void add_final(state_t s, const weight_t& w)
    {
      set_final(s, weightset().add(get_final(s), w));
    }
    weight_t get_final(state_t s) const { return get_weight_(final_, s); }
    bool is_final(state_t s) const { return final_.count(s); }
    const std::map<state_t, weight_t>& finals() const { return final_; }

    /*--------------.
    | Transitions.  |
    `--------------*/

    /// Replace the weight of (src, l, dst); zero deletes the transition.
    void set_transition(state_t src, const label_t& l, state_t dst,
                        const weight_t& w)
    {
      require_(src);
      require_(dst);
      if (weightset().is_zero(w))
        {
          del_transition(src, l, dst);
          return;
        }
      auto [it, inserted] = out_[src].try_emplace({l, dst}, w);
      if (inserted)
        {
          in_[dst].emplace(src, l);
          ++num_transitions_;
        }
      else
        it->second = w;
    }

    void add_transition(state_t src, const label_t& l, state_t dst,
                        const weight_t& w)
    {
      require_(src);
      require_(dst);
      auto it = out_[src].find({l, dst});
      if (it == out_[src].end())
        set_transition(src, l, dst, w);
      else
        set_transition(src, l, dst, weightset().add(it->second, w));
    }

    void add_transition(state_t src, const label_t& l, state_t dst)
    {
      add_transition(src, l, dst, weightset().one());
    }

    void del_transition(state_t src, const label_t& l, state_t dst)
    {
      if (out_[src].erase({l, dst}))
        {
          in_[dst].erase({src, l});
          --num_transitions_;
        }
    }

    bool has_transition(state_t src, const label_t& l, state_t dst) const
    {
      return has_state(src) && out_[src].count({l, dst});
    }

    weight_t weight_of(state_t src, const label_t& l, state_t dst) const
    {
      if (!has_state(src))
        return weightset().zero();
      auto it = out_[src].find({l, dst});
      return it == out_[src].end() ? weightset().zero() : it->second;
    }

    const out_map_t& out(state_t s) const
    {
      require_(s);
      return out_[s];
    }
    const in_set_t& in(state_t s) const
    {
      require_(s);
      return in_[s];
    }

    std::size_t num_transitions() const { return num_transitions_; }

    /// All transitions, ordered by src, then label, then dst.
    std::vector<transition> transitions() const
    {
      std::vector<transition> res;
      res.reserve(num_transitions_);
      for (state_t s = 0; s < alive_.size(); ++s)
        if (alive_[s])
          for (const auto& [k, w] : out_[s])
            res.push_back({s, k.first, k.second, w});
      return res;
    }

  private:
    void require_(state_t s) const
    {
      if (!has_state(s))
        throw std::out_of_range("invalid state: " + std::to_string(s));
    }

    void set_weight_(std::map<state_t, weight_t>& m, state_t s,
                     const weight_t& w)
    {
      require_(s);
      if (weightset().is_zero(w))
        m.erase(s);
      else
        m[s] = w;
    }

    weight_t get_weight_(const std::map<state_t, weight_t>& m,
                         state_t s) const
    {
      auto it = m.find(s);
      return it == m.end() ? weightset().zero() : it->second;
    }

    Context ctx_;
    std::vector<bool> alive_;
    std::vector<out_map_t> out_;
    std::vector<in_set_t> in_;
    std::map<state_t, weight_t> initial_;
    std::map<state_t, weight_t> final_;
    std::size_t num_states_ = 0;
    std::size_t num_transitions_ = 0;
  };

  template <typename Context>
  auto make_mutable_automaton(const Context& ctx)
  {
    return mutable_automaton<Context>{ctx};
  }

  template <typename Aut>
  using context_t_of = typename Aut::context_t;
  template <typename Aut>
  using label_t_of = typename Aut::label_t;
  template <typename Aut>
  using weight_t_of = typename Aut::weight_t;
}
