#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <dynwfa/algebra/alphabet.hpp>

namespace dynwfa
{
  namespace detail
  {
    /// Characters escaped when printing a letter as a label.
    constexpr bool needs_label_escape(char c)
    {
      return c == ',' || c == '<' || c == '>' || c == '\\' || c == '|'
             || c == '$' || c == '[' || c == ']' || c == '(' || c == ')'
             || c == '+' || c == '*';
    }

    inline std::ostream& print_letter(char c, std::ostream& o)
    {
      if (needs_label_escape(c))
        o << '\\';
      return o << c;
    }

    /// Read a (possibly escaped) letter; eof or a delimiter yields nullopt.
    inline std::optional<char> read_letter(std::istream& is)
    {
      int c = is.peek();
      if (c == std::char_traits<char>::eof())
        return std::nullopt;
      if (c == '\\')
        {
          is.get();
          int n = is.peek();
          if (n == 'e' || n == std::char_traits<char>::eof())
            {
              is.unget();
              return std::nullopt;
            }
          is.get();
          return char(n);
        }
      if (needs_label_escape(char(c)) || !is_valid_letter(char(c)))
        return std::nullopt;
      is.get();
      return char(c);
    }

    template <typename LabelSet>
    [[noreturn]] void invalid_letter(const LabelSet& ls, char c)
    {
      throw std::domain_error("invalid letter '" + std::string(1, c)
                              + "' for " + ls.vname());
    }
  }

  /// Labels are single letters of an alphabet.
  template <typename Letters>
  class letterset
  {
  public:
    using letters_t = Letters;
    using letter_t = typename Letters::letter_t;
    using word_t = typename Letters::word_t;
    using value_t = letter_t;

    explicit letterset(alphabet a) : alphabet_(std::move(a)) {}
    explicit letterset(std::string_view letters) : alphabet_(letters) {}

    static std::string sname() { return "letterset<" + Letters::sname() + ">"; }
    std::string vname() const
    {
      return "letterset<" + Letters::vname(alphabet_) + ">";
    }

    static letterset make(std::istream& is)
    {
      eat(is, "letterset<");
      auto res = letterset{Letters::make(is)};
      eat(is, '>');
      return res;
    }

    static constexpr bool is_free() { return true; }
    static constexpr bool has_one() { return false; }
    static constexpr bool is_letterized() { return true; }

    const alphabet& generators() const { return alphabet_; }
    bool has(letter_t c) const { return alphabet_.has(c); }

    static bool equal(value_t l, value_t r) { return l == r; }
    static bool less(value_t l, value_t r) { return l < r; }

    /// The label for letter \a c, validated.
    value_t letter(letter_t c) const
    {
      if (!has(c))
        detail::invalid_letter(*this, c);
      return c;
    }

    value_t conv(const letterset& src, value_t v) const
    {
      if (!has(v))
        throw std::domain_error("invalid conversion from " + src.vname()
                                + " to " + vname() + ": "
                                + std::string(1, v));
      return v;
    }

    std::ostream& print(value_t v, std::ostream& o) const
    {
      return detail::print_letter(v, o);
    }

    value_t parse(std::istream& is) const
    {
      auto c = detail::read_letter(is);
      if (!c)
        raise_parse_error(is, "expected a letter");
      return letter(*c);
    }

    /// Validate a word over this alphabet.
    word_t word(const word_t& w) const
    {
      for (char c : w)
        if (!has(c))
          detail::invalid_letter(*this, c);
      return w;
    }

    friend bool operator==(const letterset&, const letterset&) = default;

  private:
    alphabet alphabet_;
  };

  /// Labels are finite words (possibly empty) over an alphabet.
  template <typename Letters>
  class wordset
  {
  public:
    using letters_t = Letters;
    using letter_t = typename Letters::letter_t;
    using word_t = typename Letters::word_t;
    using value_t = word_t;

    explicit wordset(alphabet a) : alphabet_(std::move(a)) {}
    explicit wordset(std::string_view letters) : alphabet_(letters) {}

    static std::string sname() { return "wordset<" + Letters::sname() + ">"; }
    std::string vname() const
    {
      return "wordset<" + Letters::vname(alphabet_) + ">";
    }

    static wordset make(std::istream& is)
    {
      eat(is, "wordset<");
      auto res = wordset{Letters::make(is)};
      eat(is, '>');
      return res;
    }

    static constexpr bool is_free() { return false; }
    static constexpr bool has_one() { return true; }
    static constexpr bool is_letterized() { return false; }

    const alphabet& generators() const { return alphabet_; }
    bool has(letter_t c) const { return alphabet_.has(c); }

    static bool equal(const value_t& l, const value_t& r) { return l == r; }
    static bool less(const value_t& l, const value_t& r) { return l < r; }
    static value_t one() { return {}; }
    static bool is_one(const value_t& v) { return v.empty(); }
    static value_t mul(const value_t& l, const value_t& r) { return l + r; }

    value_t letter(letter_t c) const
    {
      if (!has(c))
        detail::invalid_letter(*this, c);
      return value_t(1, c);
    }

    value_t word(const value_t& w) const
    {
      for (char c : w)
        if (!has(c))
          detail::invalid_letter(*this, c);
      return w;
    }

    value_t conv(const wordset& src, const value_t& v) const
    {
      for (char c : v)
        if (!has(c))
          throw std::domain_error("invalid conversion from " + src.vname()
                                  + " to " + vname() + ": " + v);
      return v;
    }

    std::ostream& print(const value_t& v, std::ostream& o) const
    {
      if (v.empty())
        return o << "\\e";
      for (char c : v)
        detail::print_letter(c, o);
      return o;
    }

    value_t parse(std::istream& is) const
    {
      if (looking_at(is, "\\e"))
        {
          eat(is, "\\e");
          return one();
        }
      value_t res;
      while (auto c = detail::read_letter(is))
        res += letter(*c);
      if (res.empty())
        raise_parse_error(is, "expected a word");
      return res;
    }

    friend bool operator==(const wordset&, const wordset&) = default;

  private:
    alphabet alphabet_;
  };

  /// Labels are letters of a letterset, or the empty word.
  template <typename LabelSet>
  class nullableset
  {
  public:
    using labelset_t = LabelSet;
    using letters_t = typename LabelSet::letters_t;
    using letter_t = typename LabelSet::letter_t;
    using word_t = typename LabelSet::word_t;
    /// nullopt denotes the empty word.
    using value_t = std::optional<typename LabelSet::value_t>;

    static_assert(LabelSet::is_free(), "nullableset: requires a free labelset");

    explicit nullableset(LabelSet ls) : ls_(std::move(ls)) {}
    explicit nullableset(alphabet a) : ls_(std::move(a)) {}
    explicit nullableset(std::string_view letters) : ls_(letters) {}

    static std::string sname()
    {
      return "nullableset<" + LabelSet::sname() + ">";
    }
    std::string vname() const { return "nullableset<" + ls_.vname() + ">"; }

    static nullableset make(std::istream& is)
    {
      eat(is, "nullableset<");
      auto res = nullableset{LabelSet::make(is)};
      eat(is, '>');
      return res;
    }

    static constexpr bool is_free() { return false; }
    static constexpr bool has_one() { return true; }
    static constexpr bool is_letterized() { return true; }

    const LabelSet& labelset() const { return ls_; }
    const alphabet& generators() const { return ls_.generators(); }
    bool has(letter_t c) const { return ls_.has(c); }

    static bool equal(const value_t& l, const value_t& r) { return l == r; }
    static bool less(const value_t& l, const value_t& r) { return l < r; }
    static value_t one() { return std::nullopt; }
    static bool is_one(const value_t& v) { return !v.has_value(); }

    value_t letter(letter_t c) const { return ls_.letter(c); }
    word_t word(const word_t& w) const { return ls_.word(w); }

    value_t conv(const nullableset& src, const value_t& v) const
    {
      if (!v)
        return v;
      return ls_.conv(src.ls_, *v);
    }

    std::ostream& print(const value_t& v, std::ostream& o) const
    {
      if (!v)
        return o << "\\e";
      return ls_.print(*v, o);
    }

    value_t parse(std::istream& is) const
    {
      if (looking_at(is, "\\e"))
        {
          eat(is, "\\e");
          return one();
        }
      return ls_.parse(is);
    }

    friend bool operator==(const nullableset&, const nullableset&) = default;

  private:
    LabelSet ls_;
  };

  template <typename T>
  struct is_letter_based : std::false_type {};
  template <typename L>
  struct is_letter_based<letterset<L>> : std::true_type {};
  template <typename L>
  struct is_letter_based<wordset<L>> : std::true_type {};
  template <typename LS>
  struct is_letter_based<nullableset<LS>> : std::true_type {};

  /// Labelsets whose labels are built from the letters of one alphabet.
  template <typename T>
  inline constexpr bool is_letter_based_v = is_letter_based<T>::value;
}
