#pragma once

#include <utility>

#include <dynwfa/algebra/join.hpp>

namespace dynwfa
{
  /// Sum of two weights from possibly different weightsets, computed in
  /// their join.
  template <typename WS1, typename WS2>
  auto sum_weight(const WS1& ws1, const typename WS1::value_t& w1,
                  const WS2& ws2, const typename WS2::value_t& w2)
  {
    auto ws = join(ws1, ws2);
    auto v = ws.add(conv(ws, ws1, w1), conv(ws, ws2, w2));
    return std::pair{ws, v};
  }
}
