#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <dynwfa/dyn/value.hpp>

#ifdef DYNWFA_PLUGIN
# error "registry.hpp is host-only; plugins register through host_services"
#endif

namespace dynwfa::dyn
{
  /// Errors from dispatch and instantiation.  The message is the full
  /// (possibly multi-line) diagnostic.
  struct error : std::runtime_error
  {
    using std::runtime_error::runtime_error;
  };

  /// Invoked on a registry miss.  Expected to register the bridge for
  /// (name, sig) as a side effect, or throw.
  using miss_handler_t
    = std::function<void(const std::string& name, const signature& sig)>;

  /// Signature -> bridge map for one dyn function.
  class registry
  {
  public:
    explicit registry(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    /// Register \a fn for \a sig.  The first registration wins; returns
    /// whether \a fn was inserted.
    bool set(const signature& sig, bridge_t fn);

    /// The bridge for \a sig, or null.  Never instantiates.
    bridge_t find(const signature& sig) const;

    /// The bridge for \a sig.  On a miss, instantiate then look up once
    /// more.  Concurrent misses on one signature instantiate once; a
    /// failure is remembered and rethrown on later calls.
    bridge_t get(const signature& sig);

    /// Dispatch on vsignature(args).
    erased call(std::span<const erased> args)
    {
      return get(vsignature(args))(args);
    }

    /// Dispatch on an explicit signature (for arguments whose type is
    /// not carried by a dyn value, e.g. a context spec string).
    erased call(const signature& sig, std::span<const erased> args)
    {
      return get(sig)(args);
    }

    /// Known signatures, rendered and sorted.
    std::vector<std::string> signatures() const;

    std::size_t size() const;

  private:
    std::string name_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<signature, bridge_t, signature_hash> map_;

    std::mutex miss_mutex_;
    std::unordered_map<signature, std::shared_ptr<std::mutex>, signature_hash>
      locks_;
    std::unordered_map<signature, std::string, signature_hash> failures_;
  };

  /// The registry named \a name (created on first use).  Builtins are
  /// registered before the first lookup.
  registry& get_registry(std::string_view name);

  /// Names of all registries, sorted.
  std::vector<std::string> registry_names();

  /// Replace the miss handler; returns the previous one.
  miss_handler_t set_miss_handler(miss_handler_t handler);

  /// Register the builtin contexts and install the default miss handler.
  /// Idempotent, thread safe.
  void ensure_builtins();

  /// Insert a bridge without triggering the builtins.
  void register_bridge(const std::string& name, const signature& sig,
                       bridge_t fn);

  /// What register_functions did for one (algorithm, signature).
  struct registration
  {
    std::string name;
    std::string sig;
    /// Empty when registered, otherwise the unmet precondition.
    std::string reason;
  };

  void add_registration(std::string name, std::string sig, std::string reason);

  /// All the registration records so far, in order.
  std::vector<registration> registrations();

  /// The skip reason recorded for (name, sig), or empty.
  std::string skip_reason(const std::string& name, const std::string& sig);

  /// Call-site helper: wrap the arguments and dispatch.
  template <typename... Args>
  erased call(registry& reg, Args&&... args)
  {
    const erased a[] = {erased(std::forward<Args>(args))...};
    return reg.call(std::span<const erased>(a));
  }

  /// Unwrap a result of known kind.
  template <typename T>
  T result_as(erased&& e)
  {
    return std::get<T>(static_cast<erased::variant&&>(std::move(e)));
  }
}
