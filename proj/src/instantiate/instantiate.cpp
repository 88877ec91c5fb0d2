#include <dynwfa/instantiate/instantiate.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <dlfcn.h>
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <dynwfa/algebra/type_spec.hpp>
#include <dynwfa/dyn/registry.hpp>

#ifndef DYNWFA_VERSION
# define DYNWFA_VERSION "0"
#endif
#ifndef DYNWFA_INCLUDE_DIR
# error "DYNWFA_INCLUDE_DIR must be defined by the build"
#endif
#ifndef DYNWFA_CXX
# define DYNWFA_CXX "c++"
#endif

namespace dynwfa::inst
{
  namespace
  {
    constexpr const char* stamp_prefix = "DYNWFA-STAMP:";
    constexpr const char* stamp_placeholder = "@STAMP@";
    constexpr const char* plugin_flags
      = "-std=c++20 -O1 -fPIC -shared -fvisibility=hidden -DDYNWFA_PLUGIN "
        "-DNDEBUG";

    std::atomic<std::size_t> compiles{0};
    std::atomic<int> verbose_flag{-1};

    std::string sha256(std::string_view data)
    {
      unsigned char md[EVP_MAX_MD_SIZE];
      unsigned len = 0;
      if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(),
                      nullptr))
        throw std::runtime_error("sha256: digest failed");
      static const char* hex = "0123456789abcdef";
      std::string res;
      for (unsigned i = 0; i < len; ++i)
        {
          res += hex[md[i] >> 4];
          res += hex[md[i] & 15];
        }
      return res;
    }

    std::string getenv_or(const char* var, std::string def)
    {
      auto v = std::getenv(var);
      return v && *v ? std::string(v) : def;
    }

    std::string compiler() { return getenv_or("DYNWFA_CC", DYNWFA_CXX); }
    std::string extra_flags() { return getenv_or("DYNWFA_CCFLAGS", ""); }

    std::string shell_quote(const std::string& s)
    {
      std::string res = "'";
      for (char c : s)
        if (c == '\'')
          res += "'\\''";
        else
          res += c;
      return res + "'";
    }

    std::string read_file(const fs::path& p)
    {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream o;
      o << in.rdbuf();
      return o.str();
    }

    /// Write \a content under a pid-named temporary beside \a final,
    /// then rename.
    void write_atomically(const fs::path& final, const std::string& content)
    {
      auto tmp = final;
      tmp += "." + std::to_string(::getpid()) + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out)
          throw std::runtime_error("cannot write " + tmp.string());
      }
      install_atomically(tmp, final);
    }

    /*-------------------------.
    | Generatable algorithms.  |
    `-------------------------*/

    struct algo_info
    {
      const char* header;
      const char* bridge;
    };

    const std::map<std::string, algo_info>& algorithms()
    {
      static const std::map<std::string, algo_info> res{
        {"add_weights", {"add_weights", "add_weights_bridge"}},
        {"determinize", {"determinize", "determinize_bridge"}},
        {"evaluate", {"evaluate", "evaluate_bridge"}},
        {"focus", {"focus", "focus_bridge"}},
        {"is_proper", {"is_proper", "is_proper_bridge"}},
        {"make_context", {"make_context", "make_context_bridge"}},
        {"make_expression", {"make_expression", "make_expression_bridge"}},
        {"make_weight", {"make_weight", "make_weight_bridge"}},
        {"minimize", {"minimize", "minimize_bridge"}},
        {"num_states", {"print", "num_states_bridge"}},
        {"print_automaton", {"print", "print_automaton_bridge"}},
        {"print_expression", {"print", "print_expression_bridge"}},
        {"print_label", {"print", "print_label_bridge"}},
        {"print_weight", {"print", "print_weight_bridge"}},
        {"product", {"product", "product_bridge"}},
        {"proper", {"proper", "proper_bridge"}},
        {"read_automaton", {"read_automaton", "read_automaton_bridge"}},
        {"strip", {"print", "strip_bridge"}},
        {"thompson", {"thompson", "thompson_bridge"}},
        {"to_expression", {"to_expression", "to_expression_bridge"}},
        {"union", {"union", "union_bridge"}},
      };
      return res;
    }

    bool is_context_keyed(const std::string& name)
    {
      return name == "make_context" || name == "read_automaton"
             || name == "make_expression";
    }

    /// Insert the stamp: hash of the body and of the host fingerprint.
    std::string stamped(std::string body)
    {
      auto stamp = stamp_prefix + sha256(body + '\0' + host_fingerprint());
      auto pos = body.find(stamp_placeholder);
      body.replace(pos, std::strlen(stamp_placeholder), stamp);
      return body;
    }

    std::string stamp_of(const std::string& source)
    {
      auto pos = source.find(stamp_prefix);
      if (pos == std::string::npos)
        return {};
      auto end = source.find('"', pos);
      return source.substr(pos, end - pos);
    }

    /// Whether the library at \a lib carries \a stamp.  Scanning the
    /// bytes avoids loading a stale plugin at all.
    bool has_stamp(const fs::path& lib, const std::string& stamp)
    {
      std::error_code ec;
      if (!fs::is_regular_file(lib, ec))
        return false;
      return read_file(lib).find(stamp) != std::string::npos;
    }

    const char* plugin_entry_and_stamp =
      "DYNWFA_PLUGIN_EXPORT const char dynwfa_plugin_stamp[] = \"@STAMP@\";\n"
      "\n"
      "DYNWFA_PLUGIN_EXPORT int\n"
      "dynwfa_plugin_register(const dynwfa::dyn::host_services* services)\n"
      "{\n"
      "  if (services->version != dynwfa::dyn::services_version)\n"
      "    return 1;\n"
      "  dynwfa::dyn::plugin_services = services;\n";

    /*--------------------.
    | Locks and loading.  |
    `--------------------*/

    /// Exclusive advisory lock on <base>.lock, across processes.
    class file_lock
    {
    public:
      explicit file_lock(const fs::path& base)
      {
        auto p = base;
        p += ".lock";
        fd_ = ::open(p.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd_ < 0)
          throw std::runtime_error("cannot open lock file " + p.string()
                                   + ": " + std::strerror(errno));
        while (::flock(fd_, LOCK_EX) != 0)
          if (errno != EINTR)
            {
              auto msg = std::string(std::strerror(errno));
              ::close(fd_);
              throw std::runtime_error("cannot lock " + p.string() + ": "
                                       + msg);
            }
      }
      ~file_lock()
      {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
      }
      file_lock(const file_lock&) = delete;
      file_lock& operator=(const file_lock&) = delete;

    private:
      int fd_ = -1;
    };

    struct plugin_state
    {
      std::mutex mutex;
      std::map<std::string, std::shared_ptr<std::mutex>> locks;
      std::set<std::string> loaded;
    };

    plugin_state& plugins()
    {
      static plugin_state res;
      return res;
    }

    std::shared_ptr<std::mutex> plugin_lock(const fs::path& base)
    {
      auto& p = plugins();
      std::lock_guard lock{p.mutex};
      auto& res = p.locks[base.string()];
      if (!res)
        res = std::make_shared<std::mutex>();
      return res;
    }

    bool is_loaded(const fs::path& base)
    {
      auto& p = plugins();
      std::lock_guard lock{p.mutex};
      return p.loaded.count(base.string());
    }

    void load(const std::string& what, const fs::path& lib)
    {
      // Dynamic loaders are not reliably re-entrant.
      static std::mutex dl_mutex;
      std::lock_guard lock{dl_mutex};
      auto handle = ::dlopen(lib.c_str(), RTLD_NOW | RTLD_LOCAL);
      if (!handle)
        throw dyn::error(what + ": cannot load plugin " + lib.string() + ": "
                         + ::dlerror());
      using entry_t = int (*)(const dyn::host_services*);
      auto entry = reinterpret_cast<entry_t>(
        ::dlsym(handle, "dynwfa_plugin_register"));
      if (!entry)
        throw dyn::error(what + ": invalid plugin " + lib.string()
                         + ": no registration entry point");
      if (entry(&dyn::host_services_table()) != 0)
        throw dyn::error(what + ": plugin " + lib.string()
                         + " was built for another host version");
    }

    /// Generate, compile, install and load the plugin at \a base.
    /// \a what names the job in messages, \a registry the registry whose
    /// versions are listed on failure.
    void build_and_load(const std::string& what, const std::string& registry,
                        const std::string& sig, const fs::path& base,
                        const std::string& source)
    {
      auto in_process = plugin_lock(base);
      std::lock_guard lock{*in_process};
      if (is_loaded(base))
        return;

      auto src = fs::path(base) += ".cc";
      auto lib = fs::path(base) += ".so";
      auto log = fs::path(base) += ".log";
      auto stamp = stamp_of(source);
      fs::create_directories(base.parent_path());
      {
        file_lock across_processes{base};
        if (!has_stamp(lib, stamp))
          {
            // (i) the source, complete before it is visible.
            write_atomically(src, source);
            // (ii) compile into a pid-named library.
            auto pid = std::to_string(::getpid());
            auto tmp_lib = fs::path(base) += "." + pid + ".so";
            auto tmp_log = fs::path(base) += "." + pid + ".log";
            auto cmd = compile_command(src, tmp_lib);
            if (verbose())
              std::cerr << "dynwfa: compiling " << what << " for " << sig
                        << std::endl;
            ++compiles;
            int status = std::system((cmd + " > " + shell_quote(tmp_log.string())
                                      + " 2>&1").c_str());
            auto text = read_file(tmp_log);
            install_atomically(tmp_log, log);
            if (status != 0)
              {
                std::error_code ec;
                fs::remove(tmp_lib, ec);
                throw dyn::error(enrich_error(
                  registry, text, sig,
                  dyn::get_registry(registry).signatures(), cmd,
                  log.string()));
              }
            // (iii) the library, before loading.
            install_atomically(tmp_lib, lib);
          }
      }
      load(what, lib);
      auto& p = plugins();
      std::lock_guard l{p.mutex};
      p.loaded.insert(base.string());
    }
  }

  fs::path plugin_root()
  {
    if (auto v = std::getenv("DYNWFA_PLUGINS"); v && *v)
      return v;
    auto home = getenv_or("HOME", ".");
    return fs::path(home) / ".dynwfa" / "plugins";
  }

  std::string encode_file_name(std::string_view sig)
  {
    static const char* hex = "0123456789ABCDEF";
    std::string res;
    for (unsigned char c : sig)
      if (std::isalnum(c) || c == '_' || c == '<' || c == '>' || c == ','
          || c == ' ' || c == '-')
        res += char(c);
      else
        {
          res += '%';
          res += hex[c >> 4];
          res += hex[c & 15];
        }
    // Stay well below NAME_MAX with room for the extensions.
    if (200 < res.size())
      res = res.substr(0, 150) + "~" + sha256(sig).substr(0, 32);
    if (res.empty())
      res = "%";
    return res;
  }

  fs::path algo_base(const std::string& name, const dyn::signature& sig)
  {
    return plugin_root() / "algos" / encode_file_name(name)
           / encode_file_name(sig.to_string());
  }

  fs::path context_base(const std::string& sname)
  {
    return plugin_root() / "contexts" / encode_file_name(sname);
  }

  bool is_generatable(const std::string& name)
  {
    return algorithms().count(name);
  }

  std::string algo_source(const std::string& name, const dyn::signature& sig)
  {
    auto it = algorithms().find(name);
    if (it == algorithms().end())
      throw dyn::error(name + ": no such algorithm");
    // Parse every sname before anything is written.
    std::vector<std::string> types;
    for (auto s : sig.syms)
      types.push_back(parse_type_spec(s.str()).cxx());

    std::ostringstream o;
    o << "// Generated by dynwfa.\n"
      << "// " << name << ": " << sig.to_string() << "\n"
      << "#include <dynwfa/dyn/bridges/" << it->second.header << ".hpp>\n"
      << "\n"
      << plugin_entry_and_stamp
      << "  dynwfa::dyn::register_forced<dynwfa::dyn::" << it->second.bridge;
    for (const auto& t : types)
      o << ",\n    " << t;
    o << ">(\"" << name << "\");\n"
      << "  return 0;\n"
      << "}\n";
    return stamped(o.str());
  }

  std::string context_source(const std::string& sname)
  {
    auto spec = parse_type_spec(sname);
    if (spec.role() != type_spec::kind::context)
      throw dyn::error("instantiate_context: not a context: " + sname);
    std::ostringstream o;
    o << "// Generated by dynwfa.\n"
      << "// context: " << sname << "\n"
      << "#include <dynwfa/dyn/register_context.hpp>\n"
      << "\n"
      << plugin_entry_and_stamp
      << "  dynwfa::dyn::register_context<\n    " << spec.cxx() << ">();\n"
      << "  return 0;\n"
      << "}\n";
    return stamped(o.str());
  }

  const std::string& host_fingerprint()
  {
    static const std::string res = [] {
      std::string data = "dynwfa " DYNWFA_VERSION "\n";
      data += compiler() + "\n" + plugin_flags + " " + extra_flags() + "\n";
      data += DYNWFA_INCLUDE_DIR "\n";
      // Header contents: a changed header must invalidate every plugin.
      std::vector<fs::path> headers;
      std::error_code ec;
      for (auto it = fs::recursive_directory_iterator(DYNWFA_INCLUDE_DIR, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec))
        if (it->is_regular_file())
          headers.push_back(it->path());
      std::sort(headers.begin(), headers.end());
      for (const auto& h : headers)
        {
          data += fs::relative(h, DYNWFA_INCLUDE_DIR).string();
          data += '\0';
          data += read_file(h);
          data += '\0';
        }
      return sha256(data);
    }();
    return res;
  }

  std::string compile_command(const fs::path& src, const fs::path& lib)
  {
    std::string res = "LC_ALL=C " + compiler() + " " + plugin_flags + " -I"
                      + shell_quote(DYNWFA_INCLUDE_DIR);
    if (auto f = extra_flags(); !f.empty())
      res += " " + f;
    res += " " + shell_quote(src.string()) + " -o "
           + shell_quote(lib.string());
    return res;
  }

  void install_atomically(const fs::path& tmp, const fs::path& final)
  {
    std::error_code ec;
    fs::create_directories(final.parent_path(), ec);
    if (::rename(tmp.c_str(), final.c_str()) != 0)
      {
        int err = errno;
        std::string msg = "install: cannot rename " + tmp.string() + " to "
                          + final.string() + ": ";
        if (err == EXDEV)
          msg += "temporary and final paths are on different filesystems";
        else
          msg += std::strerror(err);
        throw std::runtime_error(msg);
      }
  }

  std::string extract_precondition(std::string_view log)
  {
    constexpr std::string_view marker = "static assertion failed";
    auto pos = log.find(marker);
    if (pos == std::string_view::npos)
      return {};
    auto eol = log.find('\n', pos);
    auto line = log.substr(pos + marker.size(),
                           eol == std::string_view::npos ? eol
                                                         : eol - pos
                                                             - marker.size());
    std::size_t start;
    if (line.substr(0, 2) == ": ")
      start = 2;
    else if (auto q = line.rfind("': "); q != std::string_view::npos)
      // clang: "static assertion failed due to requirement '...': msg"
      start = q + 3;
    else
      return {};
    auto res = std::string(line.substr(start));
    while (!res.empty() && std::isspace(static_cast<unsigned char>(res.back())))
      res.pop_back();
    return res;
  }

  std::string enrich_error(const std::string& name, std::string_view log,
                           const std::string& failed_sig,
                           const std::vector<std::string>& available,
                           const std::string& command,
                           const std::string& log_path)
  {
    std::string res;
    auto phrase = extract_precondition(log);
    if (!phrase.empty())
      res += name + ": " + phrase + "\n";
    res += "  failed signature:\n    " + failed_sig + "\n";
    res += "  available versions:\n";
    auto sorted = available;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& s : sorted)
      res += "    " + s + "\n";
    res += "  failed command:\n    " + command;
    if (!log_path.empty())
      res += "\n  compilation log:\n    " + log_path;
    return res;
  }

  void instantiate(const std::string& name, const dyn::signature& sig)
  {
    auto source = algo_source(name, sig);
    build_and_load(name, name, sig.to_string(), algo_base(name, sig), source);
  }

  void instantiate_context(const std::string& sname)
  {
    auto sym = dyn::intern(sname);
    if (dyn::get_registry("make_context").find(dyn::signature{{sym}}))
      return;
    auto source = context_source(sname);
    build_and_load("context", "make_context", sname, context_base(sname),
                   source);
  }

  void on_miss(const std::string& name, const dyn::signature& sig)
  {
    if (is_context_keyed(name) && sig.size() == 1)
      instantiate_context(sig.syms.front().str());
    else
      instantiate(name, sig);
  }

  std::size_t num_compiles()
  {
    return compiles.load();
  }

  void set_verbose(bool v)
  {
    verbose_flag = v;
  }

  bool verbose()
  {
    int v = verbose_flag.load();
    if (v < 0)
      {
        v = getenv_or("DYNWFA_VERBOSE", "0") != "0";
        verbose_flag = v;
      }
    return v;
  }

  cache_stats stats()
  {
    cache_stats res;
    std::error_code ec;
    auto root = plugin_root();
    for (auto it = fs::recursive_directory_iterator(root, ec);
         !ec && it != fs::recursive_directory_iterator(); it.increment(ec))
      if (it->is_regular_file(ec))
        {
          auto ext = it->path().extension();
          if (ext == ".cc")
            ++res.sources;
          else if (ext == ".so")
            ++res.libraries;
          else if (ext == ".log")
            ++res.logs;
          res.bytes += it->file_size(ec);
        }
    return res;
  }

  void clear_cache()
  {
    auto root = plugin_root();
    for (const char* d : {"algos", "contexts"})
      fs::remove_all(root / d);
  }
}
