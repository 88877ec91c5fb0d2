#include <dynwfa/dyn/symbol.hpp>

#include <mutex>
#include <shared_mutex>
#include <unordered_set>

namespace dynwfa::dyn
{
  namespace
  {
    // Node-based: element addresses are stable across rehashes.
    struct intern_table
    {
      std::shared_mutex mutex;
      std::unordered_set<std::string> strings;
    };

    intern_table& table()
    {
      static intern_table res;
      return res;
    }
  }

  symbol intern(std::string_view s)
  {
    auto& t = table();
    auto key = std::string(s);
    {
      std::shared_lock lock{t.mutex};
      auto it = t.strings.find(key);
      if (it != t.strings.end())
        return symbol{&*it};
    }
    std::unique_lock lock{t.mutex};
    return symbol{&*t.strings.insert(std::move(key)).first};
  }

  std::size_t num_symbols()
  {
    auto& t = table();
    std::shared_lock lock{t.mutex};
    return t.strings.size();
  }
}
