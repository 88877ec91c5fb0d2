#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/dyn/register_context.hpp>

namespace dynwfa::dyn::builtin
{
  void register_lal_char_b()
  {
    register_context<lal_char_b>();
  }
}
