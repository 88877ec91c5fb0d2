#include <dynwfa/dyn/api.hpp>

#include <ostream>

#include <dynwfa/algebra/labelsets.hpp>
#include <dynwfa/algebra/type_spec.hpp>
#include <dynwfa/automata/io.hpp>
#include <dynwfa/dyn/registry.hpp>

namespace dynwfa::dyn
{
  namespace
  {
    using word_set = wordset<char_letters>;

    registry& reg(const char* name)
    {
      return get_registry(name);
    }

    signature sig1(const std::string& sname)
    {
      return signature{{intern(sname)}};
    }

    std::string alias_free_vname(const type_spec& spec, const char* what)
    {
      if (!spec.has_values())
        throw std::invalid_argument(std::string(what)
                                    + ": missing alphabet in " + spec.sname());
      return spec.vname();
    }

    /// The alphabet of the labelset of a context or automaton name, for
    /// letter-based labelsets.
    std::optional<std::string> letters_of(const type_spec& spec)
    {
      const auto* ls = &spec.labelset();
      while (ls->name == "nullableset")
        ls = &ls->args.front();
      if ((ls->name == "letterset" || ls->name == "wordset")
          && ls->args.front().letters)
        return ls->args.front().letters;
      return std::nullopt;
    }

    label word_over(const type_spec& spec, std::string_view text,
                    const char* what)
    {
      auto letters = letters_of(spec);
      if (!letters)
        throw std::invalid_argument(std::string(what)
                                    + ": requires a letter-based labelset");
      word_set ws{*letters};
      auto w = text.empty() ? word_set::value_t{} : parse_value(ws, text);
      return make_label(ws, std::move(w));
    }

    type_spec context_spec_of(const automaton& aut)
    {
      return parse_type_spec(context_vname(aut));
    }

    template <typename T>
    T dispatch(registry& r, std::initializer_list<erased> args)
    {
      return result_as<T>(
        r.call(std::span<const erased>(args.begin(), args.size())));
    }
  }

  context make_context(std::string_view spec)
  {
    auto ctx = parse_context_spec(spec);
    auto vname = alias_free_vname(ctx, "make_context");
    static auto& r = reg("make_context");
    const erased args[] = {vname};
    return result_as<context>(r.call(sig1(ctx.sname()), args));
  }

  automaton read_automaton(std::string_view text)
  {
    auto [spec, body] = split_automaton_header(text);
    return read_automaton(make_context(spec), body);
  }

  automaton read_automaton(const context& ctx, std::string_view body)
  {
    static auto& r = reg("read_automaton");
    const erased args[] = {ctx, std::string(body)};
    return result_as<automaton>(r.call(sig1(ctx.sname().str()), args));
  }

  expression make_expression(const context& ctx, std::string_view text)
  {
    static auto& r = reg("make_expression");
    const erased args[] = {ctx, std::string(text)};
    return result_as<expression>(r.call(sig1(ctx.sname().str()), args));
  }

  label make_word(const context& ctx, std::string_view text)
  {
    return word_over(parse_type_spec(ctx.vname()), text, "make_word");
  }

  weight make_weight(std::string_view weightset, std::string_view text)
  {
    auto ws = parse_type_spec(weightset);
    if (ws.role() != type_spec::kind::weightset)
      throw std::invalid_argument("make_weight: not a weightset: "
                                  + std::string(weightset));
    static auto& r = reg("make_weight");
    const erased args[] = {ws.vname(), std::string(text)};
    return result_as<weight>(r.call(sig1(ws.sname()), args));
  }

  bool is_proper(const automaton& aut)
  {
    static auto& r = reg("is_proper");
    return dispatch<bool>(r, {aut});
  }

  weight evaluate(const automaton& aut, const label& word)
  {
    static auto& r = reg("evaluate");
    return dispatch<weight>(r, {aut, word});
  }

  weight evaluate(const automaton& aut, std::string_view word)
  {
    return evaluate(aut, word_over(context_spec_of(aut), word, "evaluate"));
  }

  automaton proper(const automaton& aut)
  {
    static auto& r = reg("proper");
    return dispatch<automaton>(r, {aut});
  }

  automaton thompson(const expression& e)
  {
    static auto& r = reg("thompson");
    return dispatch<automaton>(r, {e});
  }

  automaton determinize(const automaton& aut)
  {
    static auto& r = reg("determinize");
    return dispatch<automaton>(r, {aut});
  }

  automaton minimize(const automaton& aut, const std::string& algo)
  {
    if (algo != "moore" && algo != "signature" && algo != "brzozowski"
        && algo != "auto")
      throw std::invalid_argument("minimize: invalid algorithm: " + algo
                                  + " (expected moore, signature, "
                                    "brzozowski or auto)");
    static auto& r = reg("minimize");
    return dispatch<automaton>(r, {aut, algo});
  }

  automaton product(const std::vector<automaton>& auts)
  {
    if (auts.empty())
      throw std::invalid_argument("product: empty operand list");
    // Fail early, and with a readable message, on unjoinable contexts.
    try
      {
        auto ctx = context_spec_of(auts.front());
        for (std::size_t i = 1; i < auts.size(); ++i)
          ctx = join(ctx, context_spec_of(auts[i]));
      }
    catch (const std::exception& e)
      {
        throw std::invalid_argument(std::string("product: ") + e.what());
      }
    static auto& r = reg("product");
    return dispatch<automaton>(r, {automaton_list(auts)});
  }

  automaton focus(const automaton& aut, unsigned tape)
  {
    auto tapes = num_tapes(context_spec_of(aut));
    if (tapes == 0)
      throw std::invalid_argument("focus: requires a tupleset labelset");
    if (tapes <= tape)
      throw std::invalid_argument("focus: tape out of range: "
                                  + std::to_string(tape) + " (automaton has "
                                  + std::to_string(tapes) + " tapes)");
    static auto& r = reg("focus");
    return dispatch<automaton>(r, {aut, integral{tape}});
  }

  automaton union_(const automaton& a, const automaton& b)
  {
    try
      {
        join(context_spec_of(a), context_spec_of(b));
      }
    catch (const std::exception& e)
      {
        throw std::invalid_argument(std::string("union: ") + e.what());
      }
    static auto& r = reg("union");
    return dispatch<automaton>(r, {a, b});
  }

  automaton strip(const automaton& aut)
  {
    static auto& r = reg("strip");
    return dispatch<automaton>(r, {aut});
  }

  expression to_expression(const automaton& aut)
  {
    static auto& r = reg("to_expression");
    return dispatch<expression>(r, {aut});
  }

  weight add_weights(const weight& l, const weight& r)
  {
    try
      {
        join(parse_type_spec(l.vname()), parse_type_spec(r.vname()));
      }
    catch (const std::exception& e)
      {
        throw std::invalid_argument(std::string("add_weights: ") + e.what());
      }
    static auto& reg_ = reg("add_weights");
    return dispatch<weight>(reg_, {l, r});
  }

  std::size_t num_states(const automaton& aut)
  {
    static auto& r = reg("num_states");
    return dispatch<unsigned>(r, {aut});
  }

  std::string to_string(const automaton& aut, const std::string& format)
  {
    static auto& r = reg("print_automaton");
    return dispatch<std::string>(r, {aut, format});
  }

  std::string to_string(const expression& e)
  {
    static auto& r = reg("print_expression");
    return dispatch<std::string>(r, {e});
  }

  std::string to_string(const weight& w)
  {
    static auto& r = reg("print_weight");
    return dispatch<std::string>(r, {w});
  }

  std::string to_string(const label& l)
  {
    static auto& r = reg("print_label");
    return dispatch<std::string>(r, {l});
  }

  std::string to_string(const context& ctx)
  {
    return ctx.vname();
  }

  std::ostream& print(const automaton& aut, std::ostream& o,
                      const std::string& format)
  {
    return o << to_string(aut, format);
  }

  std::ostream& print(const expression& e, std::ostream& o)
  {
    return o << to_string(e);
  }

  std::ostream& print(const weight& w, std::ostream& o)
  {
    return o << to_string(w);
  }

  std::ostream& print(const label& l, std::ostream& o)
  {
    return o << to_string(l);
  }

  std::ostream& print(const context& ctx, std::ostream& o)
  {
    return o << to_string(ctx);
  }

  std::string context_vname(const automaton& aut)
  {
    constexpr std::string_view prefix = "mutable_automaton<";
    auto v = aut.vname();
    if (v.compare(0, prefix.size(), prefix) != 0 || v.back() != '>')
      throw std::logic_error("invalid automaton vname: " + v);
    return v.substr(prefix.size(), v.size() - prefix.size() - 1);
  }
}
