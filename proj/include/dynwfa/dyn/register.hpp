#pragma once

#include <string>
#include <type_traits>

#include <dynwfa/dyn/value.hpp>

#ifndef DYNWFA_PLUGIN
# include <dynwfa/dyn/registry.hpp>
#endif

// Registration of bridges, usable from the host and from plugins.
//
// A bridge is a class template instance B<Ts...> with
//   static erased call(std::span<const erased>);
//   static constexpr const char* unmet;  // null, or the failed precondition
// Its signature is the snames of Ts.

namespace dynwfa::dyn
{
  template <typename T>
  struct sname_of
  {
    static std::string get() { return T::sname(); }
  };

  template <unsigned N>
  struct sname_of<std::integral_constant<unsigned, N>>
  {
    static std::string get() { return integral_sname(N); }
  };

  template <typename... Ts>
  signature signature_of()
  {
    return signature{{intern(sname_of<Ts>::get())...}};
  }

  namespace detail
  {
    inline void insert_bridge(const char* name, const signature& sig,
                              bridge_t fn)
    {
#ifdef DYNWFA_PLUGIN
      plugin_services->register_bridge(name, sig.syms.data(), sig.size(), fn);
#else
      register_bridge(name, sig, fn);
#endif
    }

    inline void report(const char* name, const signature& sig,
                       const char* reason)
    {
#ifdef DYNWFA_PLUGIN
      plugin_services->report(name, sig.to_string().c_str(), reason);
#else
      add_registration(name, sig.to_string(), reason ? reason : "");
#endif
    }
  }

  /// Register B<Ts...> unless a precondition fails, in which case only
  /// the skip is reported.
  template <template <typename...> class B, typename... Ts>
  void register_one(const char* name)
  {
    auto sig = signature_of<Ts...>();
    if constexpr (B<Ts...>::unmet == nullptr)
      {
        detail::insert_bridge(name, sig, &B<Ts...>::call);
        detail::report(name, sig, nullptr);
      }
    else
      detail::report(name, sig, B<Ts...>::unmet);
  }

  /// Register B<Ts...> unconditionally.  Generated plugins use this so
  /// that a failed precondition surfaces as a compile-time assertion.
  template <template <typename...> class B, typename... Ts>
  void register_forced(const char* name)
  {
    auto sig = signature_of<Ts...>();
    detail::insert_bridge(name, sig, &B<Ts...>::call);
    detail::report(name, sig, nullptr);
  }

  /// Report a skip for a signature that cannot even be formed.
  inline void report_skip(const char* name, const signature& sig,
                          const char* reason)
  {
    detail::report(name, sig, reason);
  }

  /*-------------------.
  | Argument access.   |
  `-------------------*/

  template <typename T>
  const T& arg(std::span<const erased> args, std::size_t i)
  {
    return std::get<T>(static_cast<const erased::variant&>(args[i]));
  }

  template <typename Aut>
  const std::shared_ptr<const Aut>& aut_arg(std::span<const erased> args,
                                            std::size_t i)
  {
    return arg<automaton>(args, i).template as<Aut>();
  }

  template <typename VS, typename Tag>
  const valued<VS>& valued_arg(std::span<const erased> args, std::size_t i)
  {
    return arg<value<Tag>>(args, i).template as<VS>();
  }
}
