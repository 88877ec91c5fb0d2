#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/dyn/register_context.hpp>

namespace dynwfa::dyn::builtin
{
  void register_lal_law_char_q()
  {
    register_context<lal_law_char_q>();
  }
}
