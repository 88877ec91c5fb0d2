#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <dynwfa/dyn/symbol.hpp>

// Runtime instantiation: generate the source of a plugin that registers
// a missing bridge, compile it, install it atomically under the plugin
// root, load it, and let it register itself.
//
// Layout:  <root>/algos/<name>/<sig>.{cc,so,log,lock}
//          <root>/contexts/<sname>.{cc,so,log,lock}
// where <root> is $DYNWFA_PLUGINS, or ~/.dynwfa/plugins.

namespace dynwfa::inst
{
  namespace fs = std::filesystem;

  fs::path plugin_root();

  /// Percent-encode the characters that are unsafe in a file name.
  /// Injective; overlong results are shortened with a hash suffix.
  std::string encode_file_name(std::string_view sig);

  /// <root>/algos/<name>/<encoded sig>, without extension.
  fs::path algo_base(const std::string& name, const dyn::signature& sig);
  /// <root>/contexts/<encoded sname>, without extension.
  fs::path context_base(const std::string& sname);

  /// Whether \a name has a bridge template that can be generated.
  bool is_generatable(const std::string& name);

  /// Source of the plugin registering \a name for \a sig.  Deterministic.
  /// Throws on unknown names and malformed snames.
  std::string algo_source(const std::string& name, const dyn::signature& sig);

  /// Source of the plugin registering every algorithm for a context.
  std::string context_source(const std::string& sname);

  /// Hash of version, compiler, flags and the installed headers.
  const std::string& host_fingerprint();

  /// The compiler invocation for \a src -> \a lib.
  std::string compile_command(const fs::path& src, const fs::path& lib);

  /// rename(2) \a tmp onto \a final, creating the parent directory.
  /// Errors name both paths; a cross-device setup is reported as such.
  void install_atomically(const fs::path& tmp, const fs::path& final);

  /// The precondition phrase of the first failed static assertion in a
  /// compiler log, or empty.
  std::string extract_precondition(std::string_view log);

  /// The diagnostic for a failed compilation.
  std::string enrich_error(const std::string& name, std::string_view log,
                           const std::string& failed_sig,
                           const std::vector<std::string>& available,
                           const std::string& command,
                           const std::string& log_path = {});

  /// Make the bridge (name, sig) available in its registry.
  void instantiate(const std::string& name, const dyn::signature& sig);

  /// Make every applicable algorithm available for a context sname.
  void instantiate_context(const std::string& sname);

  /// The registries' miss handler: context-keyed names instantiate the
  /// whole context, the others a single bridge.
  void on_miss(const std::string& name, const dyn::signature& sig);

  /// Number of compiler invocations by this process.
  std::size_t num_compiles();

  /// Log compilations to stderr.  Also enabled by DYNWFA_VERBOSE=1.
  void set_verbose(bool v);
  bool verbose();

  struct cache_stats
  {
    std::size_t sources = 0;
    std::size_t libraries = 0;
    std::size_t logs = 0;
    std::size_t bytes = 0;
  };

  cache_stats stats();

  /// Remove every generated file under the plugin root.
  void clear_cache();
}
