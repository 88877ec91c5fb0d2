#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include <dynwfa/algorithms/copy.hpp>
#include <dynwfa/algorithms/determinize.hpp>
#include <dynwfa/automata/decorated.hpp>

// All the flavors return the trim minimal deterministic automaton: the
// minimal complete automaton without its sink state.  Origins are the
// classes of equivalent input states (brzozowski: the subsets built by
// the last determinization).

namespace dynwfa
{
  namespace detail
  {
    /// A trim deterministic automaton as a transition table, with a
    /// virtual sink as the last row.
    struct dfa_table
    {
      std::vector<state_t> states;       // row -> input state
      std::vector<std::vector<int>> delta; // row -> letter -> row
      std::vector<bool> final;
      int initial = -1;
      int sink() const { return int(states.size()); }
    };

    template <typename Aut>
    dfa_table make_dfa_table(const Aut& aut)
    {
      dfa_table res;
      auto useful = useful_states(aut);
      std::vector<int> row(aut.state_bound(), -1);
      for (auto s : aut.states())
        if (useful[s])
          {
            row[s] = int(res.states.size());
            res.states.push_back(s);
          }
      const auto& letters = aut.labelset().generators();
      int sink = res.sink();
      for (auto s : res.states)
        {
          std::vector<int> d(letters.size(), sink);
          std::size_t i = 0;
          for (char c : letters)
            {
              const auto& out = aut.out(s);
              auto it = out.lower_bound({c, 0});
              if (it != out.end() && it->first.first == c
                  && row[it->first.second] != -1)
                d[i] = row[it->first.second];
              ++i;
            }
          res.delta.push_back(std::move(d));
          res.final.push_back(aut.is_final(s));
        }
      res.delta.emplace_back(letters.size(), sink);
      res.final.push_back(false);
      for (const auto& [s, w] : aut.initials())
        if (row[s] != -1)
          res.initial = row[s];
      return res;
    }

    /// Build the quotient of \a t by \a cls, dropping the sink class.
    template <typename Aut>
    origin_automaton<context_t_of<Aut>>
    quotient(const std::shared_ptr<const Aut>& aut, const dfa_table& t,
             const std::vector<int>& cls, int num_classes)
    {
      using res_t = origin_automaton<context_t_of<Aut>>;
      res_t res{aut->context(), "partition", res_t::shape::set, {aut}};
      if (t.initial == -1)
        return res;
      int sink_cls = cls[t.sink()];
      std::vector<std::vector<state_t>> members(num_classes);
      std::vector<int> rep(num_classes, -1);
      for (int r = 0; r < t.sink(); ++r)
        {
          members[cls[r]].push_back(t.states[r]);
          if (rep[cls[r]] == -1)
            rep[cls[r]] = r;
        }
      // Number the classes in order of their smallest member.
      std::vector<state_t> id(num_classes, state_t(-1));
      for (int r = 0; r < t.sink(); ++r)
        if (cls[r] != sink_cls && id[cls[r]] == state_t(-1))
          id[cls[r]] = res.new_state(members[cls[r]]);
      res.set_initial(id[cls[t.initial]]);
      const auto& letters = aut->labelset().generators();
      for (int c = 0; c < num_classes; ++c)
        {
          if (c == sink_cls || rep[c] == -1)
            continue;
          int r = rep[c];
          if (t.final[r])
            res.set_final(id[c]);
          std::size_t i = 0;
          for (char l : letters)
            {
              int d = cls[t.delta[r][i++]];
              if (d != sink_cls)
                res.set_transition(id[c], l, id[d], res.weightset().one());
            }
        }
      return res;
    }

    template <typename Aut>
    void require_minimizable(const Aut& aut, const std::string& algo)
    {
      if (!is_deterministic(aut))
        throw std::domain_error("minimize: " + algo
                                + ": requires a deterministic automaton");
    }
  }

  /// Moore: refine the final/non-final partition of the completed
  /// automaton until the k-equivalence classes are stable.
  template <typename Aut>
  auto minimize_moore(const std::shared_ptr<const Aut>& aut)
  {
    detail::require_minimizable(*aut, "moore");
    auto t = detail::make_dfa_table(*aut);
    int n = int(t.delta.size());
    std::vector<int> cls(n);
    for (int r = 0; r < n; ++r)
      cls[r] = t.final[r] ? 1 : 0;
    int num = 0;
    while (true)
      {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(n);
        for (int r = 0; r < n; ++r)
          {
            std::vector<int> key;
            key.reserve(t.delta[r].size() + 1);
            key.push_back(cls[r]);
            for (int d : t.delta[r])
              key.push_back(cls[d]);
            next[r] = ids.emplace(std::move(key), int(ids.size())).first->second;
          }
        cls.swap(next);
        if (int(ids.size()) == num)
          break;
        num = int(ids.size());
      }
    return detail::quotient(aut, t, cls, num);
  }

  /// Signature refinement: states are split by the hash-consed signature
  /// (class, finality, outgoing (letter, class) pairs); missing
  /// transitions are left out instead of leading to a sink.
  template <typename Aut>
  auto minimize_signature(const std::shared_ptr<const Aut>& aut)
  {
    detail::require_minimizable(*aut, "signature");
    auto t = detail::make_dfa_table(*aut);
    int n = t.sink();
    std::vector<int> cls(n + 1, 0);
    cls[n] = -1;
    int num = 1;
    while (true)
      {
        std::unordered_map<std::vector<int>, int,
                           boost::hash<std::vector<int>>> ids;
        ids.reserve(n);
        std::vector<int> next(n + 1, -1);
        for (int r = 0; r < n; ++r)
          {
            std::vector<int> sig;
            sig.push_back(cls[r]);
            sig.push_back(t.final[r]);
            for (std::size_t i = 0; i < t.delta[r].size(); ++i)
              if (t.delta[r][i] != n)
                {
                  sig.push_back(int(i));
                  sig.push_back(cls[t.delta[r][i]]);
                }
            next[r] = ids.emplace(std::move(sig), int(ids.size())).first->second;
          }
        cls.swap(next);
        if (int(ids.size()) == num)
          break;
        num = int(ids.size());
      }
    // The sink is a class of its own.
    cls[n] = num;
    return detail::quotient(aut, t, cls, num + 1);
  }

  /// Brzozowski: determinize the transpose of the determinized
  /// transpose.  Works on nondeterministic input.
  template <typename Aut>
  auto minimize_brzozowski(const std::shared_ptr<const Aut>& aut)
  {
    using ctx_t = context_t_of<Aut>;
    using res_t = origin_automaton<ctx_t>;
    auto first = std::make_shared<const res_t>(determinize(
      std::make_shared<const mutable_automaton<ctx_t>>(transpose(*aut))));
    auto back = transpose(*first);
    res_t res{aut->context(), "brzozowski", res_t::shape::set, {aut, first}};
    detail::determinize_into(back, res);
    return res;
  }

  /// Minimal automaton with the given algorithm: "moore", "signature",
  /// "brzozowski", or "auto" (brzozowski if \a aut is not deterministic,
  /// signature otherwise).
  template <typename Aut>
  auto minimize(const std::shared_ptr<const Aut>& aut,
                const std::string& algo = "auto")
  {
    using ctx_t = context_t_of<Aut>;
    static_assert(is_boolean_v<weightset_t_of<ctx_t>>,
                  "requires Boolean weightset");
    static_assert(labelset_t_of<ctx_t>::is_free(), "requires a free labelset");
    if constexpr (is_boolean_v<weightset_t_of<ctx_t>>
                  && labelset_t_of<ctx_t>::is_free())
      {
        if (algo == "moore")
          return minimize_moore(aut);
        if (algo == "signature")
          return minimize_signature(aut);
        if (algo == "brzozowski")
          return minimize_brzozowski(aut);
        if (algo == "auto")
          return is_deterministic(*aut) ? minimize_signature(aut)
                                        : minimize_brzozowski(aut);
        throw std::invalid_argument("minimize: invalid algorithm: " + algo
                                    + " (expected moore, signature, "
                                      "brzozowski or auto)");
      }
    else
      return origin_automaton<ctx_t>{aut->context(), "partition",
                                     origin_automaton<ctx_t>::shape::set,
                                     {aut}};
  }

  template <typename Aut>
    requires requires { typename Aut::context_t; }
  auto minimize(const Aut& aut, const std::string& algo = "auto")
  {
    return minimize(std::make_shared<const Aut>(aut), algo);
  }
}
