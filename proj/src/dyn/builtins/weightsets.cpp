#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/dyn/register_context.hpp>

namespace dynwfa::dyn::builtin
{
  void register_weightsets()
  {
    register_weightset<b>();
    register_weightset<f2>();
    register_weightset<z>();
    register_weightset<q>();
    register_weightset<zmin>();
    // The numeric chain: the only heterogeneous join.
    register_one<add_weights_bridge, z, q>("add_weights");
    register_one<add_weights_bridge, q, z>("add_weights");
  }
}

namespace dynwfa::dyn
{
  void register_builtins()
  {
    builtin::register_weightsets();
    builtin::register_lal_char_b();
    builtin::register_law_char_b();
    builtin::register_lal_char_z();
    builtin::register_lal_char_zmin();
    builtin::register_lal_law_char_q();
  }
}
