#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <dynwfa/dyn/services.hpp>

namespace dynwfa::dyn
{
  /// An interned string: equality and hashing are on the address.
  class symbol
  {
  public:
    symbol() : str_(&empty_()) {}
    explicit symbol(const std::string* s) : str_(s) {}

    const std::string& str() const { return *str_; }
    const std::string* get() const { return str_; }

    friend bool operator==(symbol l, symbol r) { return l.str_ == r.str_; }
    friend bool operator<(symbol l, symbol r) { return *l.str_ < *r.str_; }

  private:
    static const std::string& empty_()
    {
      static const std::string res;
      return res;
    }

    const std::string* str_;
  };

#ifdef DYNWFA_PLUGIN
  inline symbol intern(std::string_view s)
  {
    return symbol{plugin_services->intern(s)};
  }
#else
  /// The unique symbol for \a s.  Thread safe.
  symbol intern(std::string_view s);

  /// Number of distinct strings interned so far.
  std::size_t num_symbols();
#endif

  /// Ordered sequence of snames: the key of registries.
  struct signature
  {
    std::vector<symbol> syms;

    std::size_t size() const { return syms.size(); }
    bool empty() const { return syms.empty(); }

    /// Comma-space-joined snames.
    std::string to_string() const
    {
      std::string res;
      const char* sep = "";
      for (auto s : syms)
        {
          res += sep;
          res += s.str();
          sep = ", ";
        }
      return res;
    }

    friend bool operator==(const signature&, const signature&) = default;
  };

  struct signature_hash
  {
    std::size_t operator()(const signature& sig) const
    {
      std::size_t res = sig.syms.size();
      for (auto s : sig.syms)
        res = res * 31 + std::hash<const void*>{}(s.get());
      return res;
    }
  };
}

template <>
struct std::hash<dynwfa::dyn::symbol>
{
  std::size_t operator()(dynwfa::dyn::symbol s) const
  {
    return std::hash<const void*>{}(s.get());
  }
};
