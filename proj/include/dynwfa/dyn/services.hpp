#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

// The table of host functions handed to a plugin at load time.  Plugins
// are built with -DDYNWFA_PLUGIN and hidden visibility: they never touch
// host globals directly, every service goes through this table.

namespace dynwfa::dyn
{
  class symbol;
  struct erased;

  /// The uniform type of bridges: erased arguments in, erased result out.
  using bridge_t = erased (*)(std::span<const erased>);

  /// Bumped whenever the layout of host_services changes.
  inline constexpr unsigned services_version = 1;

  struct host_services
  {
    unsigned version;
    const std::string* (*intern)(std::string_view);
    void (*register_bridge)(const char* name, const symbol* sig,
                            std::size_t size, bridge_t bridge);
    /// One call per registered (reason null) or skipped algorithm.
    void (*report)(const char* name, const char* sig, const char* reason);
  };

#ifdef DYNWFA_PLUGIN
  inline const host_services* plugin_services = nullptr;
#else
  /// The table handed to plugins.
  const host_services& host_services_table();
#endif
}

#ifdef DYNWFA_PLUGIN
# define DYNWFA_PLUGIN_EXPORT extern "C" __attribute__((visibility("default")))
#endif
