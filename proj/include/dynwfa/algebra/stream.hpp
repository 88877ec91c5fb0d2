#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynwfa
{
  /// Offset of the read head, or -1 when the stream is exhausted.
  inline long stream_offset(std::istream& is)
  {
    auto pos = is.tellg();
    return pos == std::istream::pos_type(-1) ? -1 : static_cast<long>(pos);
  }

  [[noreturn]] inline void raise_parse_error(std::istream& is,
                                             std::string_view msg)
  {
    is.clear();
    std::ostringstream o;
    o << "syntax error at offset " << stream_offset(is) << ": " << msg;
    throw std::invalid_argument(o.str());
  }

  /// Consume exactly \a expected, or throw.
  inline void eat(std::istream& is, std::string_view expected)
  {
    for (char c : expected)
      {
        int got = is.peek();
        if (got != static_cast<unsigned char>(c))
          {
            std::string msg = "expected '" + std::string(expected) + "'";
            if (got == std::char_traits<char>::eof())
              msg += ", got end of input";
            else
              msg += ", got '" + std::string(1, char(got)) + "'";
            raise_parse_error(is, msg);
          }
        is.get();
      }
  }

  inline void eat(std::istream& is, char expected)
  {
    eat(is, std::string_view(&expected, 1));
  }

  inline void skip_spaces(std::istream& is)
  {
    while (is.peek() != std::char_traits<char>::eof()
           && std::isspace(is.peek()))
      is.get();
  }

  /// Whether the next characters are \a s (nothing is consumed).
  inline bool looking_at(std::istream& is, std::string_view s)
  {
    auto pos = is.tellg();
    bool res = true;
    for (char c : s)
      if (is.get() != static_cast<unsigned char>(c))
        {
          res = false;
          break;
        }
    is.clear();
    is.seekg(pos);
    return res;
  }

  /// Parse a whole string with \a fun, requiring full consumption.
  template <typename Fun>
  auto parse_all(std::string_view text, Fun fun)
  {
    std::istringstream is{std::string(text)};
    auto res = fun(is);
    if (is.peek() != std::char_traits<char>::eof())
      raise_parse_error(is, "unexpected trailing characters");
    return res;
  }
}
