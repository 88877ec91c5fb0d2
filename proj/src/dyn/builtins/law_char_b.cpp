#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/dyn/register_context.hpp>

namespace dynwfa::dyn::builtin
{
  void register_law_char_b()
  {
    register_context<law_char_b>();
  }
}
