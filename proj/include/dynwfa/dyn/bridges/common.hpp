#pragma once

#include <sstream>
#include <string>
#include <type_traits>

#include <dynwfa/automata/decorated.hpp>
#include <dynwfa/automata/io.hpp>
#include <dynwfa/automata/mutable_automaton.hpp>
#include <dynwfa/dyn/register.hpp>
#include <dynwfa/dyn/value.hpp>

namespace dynwfa::dyn
{
  namespace detail
  {
    /// The message of a precondition: null when \a ok.
    constexpr const char* unless(bool ok, const char* reason)
    {
      return ok ? nullptr : reason;
    }

    template <typename Ctx>
    inline constexpr bool letter_based_ctx_v
      = is_letter_based_v<labelset_t_of<Ctx>>;

    template <typename Ctx>
    inline constexpr bool free_ctx_v = labelset_t_of<Ctx>::is_free();

    template <typename Ctx>
    inline constexpr bool boolean_ctx_v = is_boolean_v<weightset_t_of<Ctx>>;

    /// Precondition shared by determinize and minimize, in the order of
    /// their static assertions.
    template <typename Ctx>
    inline constexpr const char* boolean_free_unmet
      = !boolean_ctx_v<Ctx> ? "requires Boolean weightset"
      : !free_ctx_v<Ctx>    ? "requires a free labelset"
      : nullptr;
  }
}
