#pragma once

#include <dynwfa/algebra/context.hpp>

namespace dynwfa::dyn
{
  namespace builtin
  {
    using lal_char = letterset<char_letters>;
    using law_char = wordset<char_letters>;

    using lal_char_b = dynwfa::context<lal_char, b>;
    using law_char_b = dynwfa::context<law_char, b>;
    using lal_char_z = dynwfa::context<lal_char, z>;
    using lal_char_zmin = dynwfa::context<lal_char, zmin>;
    using lal_law_char_q = dynwfa::context<tupleset<lal_char, law_char>, q>;

    // One translation unit each.
    void register_lal_char_b();
    void register_law_char_b();
    void register_lal_char_z();
    void register_lal_char_zmin();
    void register_lal_law_char_q();
    void register_weightsets();
  }

  /// Register the precompiled contexts and weightsets.
  void register_builtins();
}
