#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <dynwfa/dyn/value.hpp>

// The dyn API: free functions on type-erased values.  Each one builds the
// signature of its arguments and dispatches through its registry; a miss
// compiles the missing bridge.

namespace dynwfa::dyn
{
  /// A context from a spec: a full vname, or "lal_char(abc), b" style.
  context make_context(std::string_view spec);

  /// An automaton from its text, including the "context = ..." header.
  automaton read_automaton(std::string_view text);
  /// An automaton from the body of its text, over \a ctx.
  automaton read_automaton(const context& ctx, std::string_view body);

  expression make_expression(const context& ctx, std::string_view text);

  /// A word over the letters of a letter-based context.
  label make_word(const context& ctx, std::string_view text);

  /// A weight from a weightset name ("z", "q", "tupleset<b, z>"...).
  weight make_weight(std::string_view weightset, std::string_view text);

  bool is_proper(const automaton& aut);
  weight evaluate(const automaton& aut, const label& word);
  /// Convenience: the word is built over the alphabet of \a aut.
  weight evaluate(const automaton& aut, std::string_view word);
  automaton proper(const automaton& aut);
  automaton thompson(const expression& e);
  automaton determinize(const automaton& aut);
  /// algo: "moore", "signature", "brzozowski" or "auto".
  automaton minimize(const automaton& aut, const std::string& algo = "auto");
  /// Variadic product: one dispatch for the whole list.
  automaton product(const std::vector<automaton>& auts);
  automaton focus(const automaton& aut, unsigned tape);
  automaton union_(const automaton& a, const automaton& b);
  automaton strip(const automaton& aut);
  expression to_expression(const automaton& aut);
  /// Sum in the join of the weightsets.
  weight add_weights(const weight& l, const weight& r);

  std::size_t num_states(const automaton& aut);

  /// format: "text" or "dot".
  std::string to_string(const automaton& aut,
                        const std::string& format = "text");
  std::string to_string(const expression& e);
  std::string to_string(const weight& w);
  std::string to_string(const label& l);
  std::string to_string(const context& ctx);

  std::ostream& print(const automaton& aut, std::ostream& o,
                      const std::string& format = "text");
  std::ostream& print(const expression& e, std::ostream& o);
  std::ostream& print(const weight& w, std::ostream& o);
  std::ostream& print(const label& l, std::ostream& o);
  std::ostream& print(const context& ctx, std::ostream& o);

  /// The context vname of an automaton (no dispatch).
  std::string context_vname(const automaton& aut);
}
