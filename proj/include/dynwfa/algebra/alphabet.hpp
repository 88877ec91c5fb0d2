#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include <dynwfa/algebra/stream.hpp>

namespace dynwfa
{
  /// Whether \a c may be used as a letter: printable ASCII, no space.
  constexpr bool is_valid_letter(char c)
  {
    return 0x21 <= c && c <= 0x7e;
  }

  /// Characters escaped with a backslash inside "char_letters(...)".
  constexpr bool needs_vname_escape(char c)
  {
    return c == '(' || c == ')' || c == '\\';
  }

  /// A sorted, duplicate-free, non-empty set of letters.
  class alphabet
  {
  public:
    explicit alphabet(std::string_view letters)
      : letters_(letters)
    {
      std::sort(letters_.begin(), letters_.end());
      letters_.erase(std::unique(letters_.begin(), letters_.end()),
                     letters_.end());
      if (letters_.empty())
        throw std::invalid_argument("empty alphabet");
      for (char c : letters_)
        if (!is_valid_letter(c))
          throw std::invalid_argument("invalid letter in alphabet: code "
                                      + std::to_string(int(c)));
    }

    bool has(char c) const
    {
      return std::binary_search(letters_.begin(), letters_.end(), c);
    }

    const std::string& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    std::size_t size() const { return letters_.size(); }

    /// Letters with vname escapes applied.
    std::string escaped() const
    {
      std::string res;
      for (char c : letters_)
        {
          if (needs_vname_escape(c))
            res += '\\';
          res += c;
        }
      return res;
    }

    alphabet join(const alphabet& other) const
    {
      return alphabet{letters_ + other.letters_};
    }

    bool includes(const alphabet& other) const
    {
      return std::includes(letters_.begin(), letters_.end(),
                           other.letters_.begin(), other.letters_.end());
    }

    friend bool operator==(const alphabet&, const alphabet&) = default;

  private:
    std::string letters_;
  };

  /// The letter type of all the labelsets: plain chars.
  struct char_letters
  {
    using letter_t = char;
    using word_t = std::string;

    static std::string sname() { return "char_letters"; }

    /// Read "char_letters(...)" with backslash escapes.
    static alphabet make(std::istream& is)
    {
      eat(is, "char_letters(");
      std::string letters;
      while (true)
        {
          int c = is.get();
          if (c == std::char_traits<char>::eof())
            raise_parse_error(is, "unterminated letter list");
          if (c == ')')
            break;
          if (c == '\\')
            {
              c = is.get();
              if (c == std::char_traits<char>::eof())
                raise_parse_error(is, "dangling escape in letter list");
            }
          letters += char(c);
        }
      try
        {
          return alphabet{letters};
        }
      catch (const std::invalid_argument& e)
        {
          raise_parse_error(is, e.what());
        }
    }

    static std::string vname(const alphabet& a)
    {
      return "char_letters(" + a.escaped() + ")";
    }
  };
}
