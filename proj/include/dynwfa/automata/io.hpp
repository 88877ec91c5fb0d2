#pragma once

#include <cctype>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <dynwfa/automata/mutable_automaton.hpp>

// Text format, one automaton per file:
//
//   context = <vname>
//   $ -> 0
//   0 -> 1 a, b <2>
//   1 -> $
//
// Weights are optional and written between angle brackets.  Blank lines
// and lines starting with '#' are ignored.

namespace dynwfa
{
  namespace detail
  {
    template <typename Aut>
    void print_weight_suffix(const Aut& aut, const weight_t_of<Aut>& w,
                             std::ostream& o)
    {
      if (!aut.weightset().is_one(w))
        {
          o << " <";
          aut.weightset().print(w, o);
          o << '>';
        }
    }

    /// Transitions of \a s grouped by destination, then weight.
    template <typename Aut>
    auto grouped_out(const Aut& aut, state_t s)
    {
      using label_t = label_t_of<Aut>;
      using weight_t = weight_t_of<Aut>;
      std::map<state_t, std::vector<std::pair<weight_t, std::vector<label_t>>>>
        res;
      for (const auto& [k, w] : aut.out(s))
        {
          auto& groups = res[k.second];
          auto it = groups.begin();
          for (; it != groups.end(); ++it)
            if (aut.weightset().equal(it->first, w))
              break;
          if (it == groups.end())
            groups.push_back({w, {k.first}});
          else
            it->second.push_back(k.first);
        }
      return res;
    }

    inline std::string dot_escape(const std::string& s)
    {
      std::string res;
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            res += '\\';
          res += c;
        }
      return res;
    }
  }

  template <typename Context>
  std::ostream& print(const mutable_automaton<Context>& aut, std::ostream& o)
  {
    o << "context = " << aut.context().vname() << '\n';
    for (const auto& [s, w] : aut.initials())
      {
        o << "$ -> " << s;
        detail::print_weight_suffix(aut, w, o);
        o << '\n';
      }
    for (auto s : aut.states())
      for (const auto& [dst, groups] : detail::grouped_out(aut, s))
        for (const auto& [w, labels] : groups)
          {
            o << s << " -> " << dst << ' ';
            const char* sep = "";
            for (const auto& l : labels)
              {
                o << sep;
                aut.labelset().print(l, o);
                sep = ", ";
              }
            detail::print_weight_suffix(aut, w, o);
            o << '\n';
          }
    for (const auto& [s, w] : aut.finals())
      {
        o << s << " -> $";
        detail::print_weight_suffix(aut, w, o);
        o << '\n';
      }
    return o;
  }

  template <typename Context>
  std::string to_string(const mutable_automaton<Context>& aut)
  {
    std::ostringstream o;
    print(aut, o);
    return o.str();
  }

  /// Graphviz rendering.
  template <typename Context>
  std::ostream& print_dot(const mutable_automaton<Context>& aut,
                          std::ostream& o)
  {
    const auto& ws = aut.weightset();
    auto weight_prefix = [&](const auto& w) {
      std::ostringstream res;
      if (!ws.is_one(w))
        {
          res << '<';
          ws.print(w, res);
          res << '>';
        }
      return res.str();
    };
    o << "digraph\n{\n"
      << "  label = \"" << detail::dot_escape(aut.context().vname())
      << "\"\n"
      << "  rankdir = LR\n"
      << "  {\n"
      << "    node [shape = point, width = 0]\n";
    for (const auto& [s, w] : aut.initials())
      o << "    I" << s << '\n';
    for (const auto& [s, w] : aut.finals())
      o << "    F" << s << '\n';
    o << "  }\n"
      << "  node [shape = circle]\n";
    for (auto s : aut.states())
      {
        o << "  " << s;
        auto name = aut.state_name(s);
        if (!name.empty())
          o << " [label = \"" << s << "\\n" << detail::dot_escape(name)
            << "\"]";
        o << '\n';
      }
    for (const auto& [s, w] : aut.initials())
      {
        o << "  I" << s << " -> " << s;
        if (!ws.is_one(w))
          o << " [label = \"" << detail::dot_escape(weight_prefix(w)) << "\"]";
        o << '\n';
      }
    for (auto s : aut.states())
      for (const auto& [dst, groups] : detail::grouped_out(aut, s))
        {
          std::ostringstream label;
          const char* sep = "";
          for (const auto& [w, labels] : groups)
            for (const auto& l : labels)
              {
                label << sep << weight_prefix(w);
                aut.labelset().print(l, label);
                sep = ", ";
              }
          o << "  " << s << " -> " << dst << " [label = \""
            << detail::dot_escape(label.str()) << "\"]\n";
        }
    for (const auto& [s, w] : aut.finals())
      {
        o << "  " << s << " -> F" << s;
        if (!ws.is_one(w))
          o << " [label = \"" << detail::dot_escape(weight_prefix(w)) << "\"]";
        o << '\n';
      }
    return o << "}\n";
  }

  /// Split the text of an automaton into its context spec (the header
  /// line) and the rest.
  inline std::pair<std::string, std::string>
  split_automaton_header(std::string_view text)
  {
    std::size_t pos = 0;
    while (pos < text.size())
      {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
          eol = text.size();
        auto line = text.substr(pos, eol - pos);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
          {
            pos = eol + 1;
            continue;
          }
        line = line.substr(first);
        constexpr std::string_view key = "context";
        if (line.substr(0, key.size()) != key)
          throw std::invalid_argument("automaton: expected a 'context = ...' "
                                      "header line");
        line.remove_prefix(key.size());
        auto eq = line.find_first_not_of(" \t");
        if (eq == std::string_view::npos || line[eq] != '=')
          throw std::invalid_argument("automaton: expected '=' after "
                                      "'context'");
        line.remove_prefix(eq + 1);
        auto b = line.find_first_not_of(" \t");
        auto e = line.find_last_not_of(" \t\r");
        std::string spec
          = b == std::string_view::npos ? "" : std::string(line.substr(b, e - b + 1));
        auto rest = eol < text.size() ? text.substr(eol + 1) : std::string_view{};
        return {spec, std::string(rest)};
      }
    throw std::invalid_argument("automaton: missing 'context = ...' header");
  }

  /// Read the body of an automaton (the lines after the header).
  /// State ids are renumbered densely in increasing order.
  template <typename Context>
  mutable_automaton<Context> read_automaton(const Context& ctx,
                                            std::string_view body)
  {
    using aut_t = mutable_automaton<Context>;
    using label_t = label_t_of<aut_t>;
    using weight_t = weight_t_of<aut_t>;
    constexpr unsigned long pre = -1;
    struct line_t
    {
      unsigned long src, dst;
      std::vector<label_t> labels;
      weight_t weight;
    };
    const auto& ls = ctx.labelset();
    const auto& ws = ctx.weightset();

    std::vector<line_t> lines;
    std::set<unsigned long> ids;
    std::istringstream text{std::string(body)};
    std::string line;
    unsigned lineno = 0;
    auto read_end = [&](std::istream& is) -> unsigned long {
      skip_spaces(is);
      if (is.peek() == '$')
        {
          is.get();
          return pre;
        }
      if (!std::isdigit(is.peek()))
        raise_parse_error(is, "expected a state number or '$'");
      unsigned long res;
      is >> res;
      ids.insert(res);
      return res;
    };
    while (std::getline(text, line))
      {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
          continue;
        if (line.back() == '\r')
          line.pop_back();
        try
          {
            std::istringstream is{line};
            line_t l{0, 0, {}, ws.one()};
            l.src = read_end(is);
            skip_spaces(is);
            eat(is, "->");
            l.dst = read_end(is);
            if (l.src == pre && l.dst == pre)
              raise_parse_error(is, "'$ -> $' is not a transition");
            skip_spaces(is);
            if (l.src != pre && l.dst != pre)
              {
                while (true)
                  {
                    l.labels.push_back(ls.parse(is));
                    skip_spaces(is);
                    if (is.peek() != ',')
                      break;
                    is.get();
                    skip_spaces(is);
                  }
              }
            if (is.peek() == '<')
              {
                is.get();
                l.weight = ws.parse(is);
                eat(is, '>');
                skip_spaces(is);
              }
            if (is.peek() != std::char_traits<char>::eof())
              raise_parse_error(is, "unexpected trailing characters");
            lines.push_back(std::move(l));
          }
        catch (const std::exception& e)
          {
            throw std::invalid_argument("automaton: line "
                                        + std::to_string(lineno) + ": "
                                        + e.what());
          }
      }

    aut_t res{ctx};
    std::map<unsigned long, state_t> map;
    for (auto id : ids)
      map[id] = res.new_state();
    for (const auto& l : lines)
      if (l.src == pre)
        res.add_initial(map[l.dst], l.weight);
      else if (l.dst == pre)
        res.add_final(map[l.src], l.weight);
      else
        for (const auto& lbl : l.labels)
          res.add_transition(map[l.src], lbl, map[l.dst], l.weight);
    return res;
  }

  /// Read an automaton whose header is a canonical vname of \a Context.
  template <typename Context>
  mutable_automaton<Context> read_automaton(std::string_view text)
  {
    auto [spec, body] = split_automaton_header(text);
    return read_automaton(Context::make(spec), body);
  }
}
