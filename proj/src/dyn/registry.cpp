#include <dynwfa/dyn/registry.hpp>

#include <algorithm>
#include <map>

#include <dynwfa/dyn/builtins.hpp>
#include <dynwfa/instantiate/instantiate.hpp>

namespace dynwfa::dyn
{
  namespace
  {
    struct registries
    {
      std::mutex mutex;
      // std::map: stable addresses and sorted names.
      std::map<std::string, std::unique_ptr<registry>, std::less<>> map;
    };

    registries& all()
    {
      static registries res;
      return res;
    }

    registry& raw_registry(std::string_view name)
    {
      auto& r = all();
      std::lock_guard lock{r.mutex};
      auto it = r.map.find(name);
      if (it == r.map.end())
        it = r.map.emplace(std::string(name),
                           std::make_unique<registry>(std::string(name)))
               .first;
      return *it->second;
    }

    struct handler_slot
    {
      std::mutex mutex;
      miss_handler_t handler;
    };

    handler_slot& handler()
    {
      static handler_slot res;
      return res;
    }

    miss_handler_t current_handler()
    {
      auto& h = handler();
      std::lock_guard lock{h.mutex};
      return h.handler;
    }

    struct registration_log
    {
      std::mutex mutex;
      std::vector<registration> records;
      std::map<std::pair<std::string, std::string>, std::string> seen;
    };

    registration_log& reg_log()
    {
      static registration_log res;
      return res;
    }

    std::string missing_message(const registry& reg, const signature& sig,
                                const std::string& reason)
    {
      std::string res = reg.name() + ": ";
      res += reason.empty() ? "no implementation" : reason;
      res += "\n  failed signature:\n    " + sig.to_string();
      res += "\n  available versions:";
      for (const auto& s : reg.signatures())
        res += "\n    " + s;
      return res;
    }
  }

  bool registry::set(const signature& sig, bridge_t fn)
  {
    std::unique_lock lock{mutex_};
    return map_.emplace(sig, fn).second;
  }

  bridge_t registry::find(const signature& sig) const
  {
    std::shared_lock lock{mutex_};
    auto it = map_.find(sig);
    return it == map_.end() ? nullptr : it->second;
  }

  bridge_t registry::get(const signature& sig)
  {
    if (auto res = find(sig))
      return res;

    std::shared_ptr<std::mutex> sig_lock;
    {
      std::lock_guard lock{miss_mutex_};
      auto& l = locks_[sig];
      if (!l)
        l = std::make_shared<std::mutex>();
      sig_lock = l;
    }
    std::lock_guard lock{*sig_lock};
    // Someone else may have instantiated it meanwhile.
    if (auto res = find(sig))
      return res;
    {
      std::lock_guard l{miss_mutex_};
      auto it = failures_.find(sig);
      if (it != failures_.end())
        throw error(it->second);
    }

    auto remember = [&](const std::string& msg) {
      std::lock_guard l{miss_mutex_};
      failures_.emplace(sig, msg);
    };
    try
      {
        if (auto h = current_handler())
          h(name_, sig);
      }
    catch (const std::exception& e)
      {
        remember(e.what());
        throw error(e.what());
      }
    if (auto res = find(sig))
      return res;
    auto msg = missing_message(*this, sig,
                               skip_reason(name_, sig.to_string()));
    remember(msg);
    throw error(msg);
  }

  std::vector<std::string> registry::signatures() const
  {
    std::vector<std::string> res;
    {
      std::shared_lock lock{mutex_};
      res.reserve(map_.size());
      for (const auto& [sig, fn] : map_)
        res.push_back(sig.to_string());
    }
    std::sort(res.begin(), res.end());
    return res;
  }

  std::size_t registry::size() const
  {
    std::shared_lock lock{mutex_};
    return map_.size();
  }

  registry& get_registry(std::string_view name)
  {
    ensure_builtins();
    return raw_registry(name);
  }

  std::vector<std::string> registry_names()
  {
    ensure_builtins();
    auto& r = all();
    std::lock_guard lock{r.mutex};
    std::vector<std::string> res;
    for (const auto& [name, reg] : r.map)
      res.push_back(name);
    return res;
  }

  miss_handler_t set_miss_handler(miss_handler_t h)
  {
    auto& slot = handler();
    std::lock_guard lock{slot.mutex};
    std::swap(slot.handler, h);
    return h;
  }

  void ensure_builtins()
  {
    static std::once_flag once;
    std::call_once(once, [] {
        register_builtins();
        auto& slot = handler();
        std::lock_guard lock{slot.mutex};
        if (!slot.handler)
          slot.handler = inst::on_miss;
      });
  }

  void register_bridge(const std::string& name, const signature& sig,
                       bridge_t fn)
  {
    raw_registry(name).set(sig, fn);
  }

  void add_registration(std::string name, std::string sig, std::string reason)
  {
    auto& l = reg_log();
    std::lock_guard lock{l.mutex};
    // Companion contexts overlap: record each pair once.
    if (!l.seen.emplace(std::pair{name, sig}, reason).second)
      return;
    l.records.push_back({std::move(name), std::move(sig), std::move(reason)});
  }

  std::vector<registration> registrations()
  {
    auto& l = reg_log();
    std::lock_guard lock{l.mutex};
    return l.records;
  }

  std::string skip_reason(const std::string& name, const std::string& sig)
  {
    auto& l = reg_log();
    std::lock_guard lock{l.mutex};
    auto it = l.seen.find({name, sig});
    return it == l.seen.end() ? std::string{} : it->second;
  }

  /*-----------------------------------.
  | The table handed to the plugins.   |
  `-----------------------------------*/

  namespace
  {
    const std::string* services_intern(std::string_view s)
    {
      return intern(s).get();
    }

    void services_register(const char* name, const symbol* sig,
                           std::size_t size, bridge_t fn)
    {
      register_bridge(name, signature{{sig, sig + size}}, fn);
    }

    void services_report(const char* name, const char* sig,
                         const char* reason)
    {
      add_registration(name, sig, reason ? reason : "");
    }
  }

  const host_services& host_services_table()
  {
    static const host_services res{services_version, services_intern,
                                   services_register, services_report};
    return res;
  }
}
