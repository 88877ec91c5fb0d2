#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Timing harness for the dispatch and pipeline benchmarks.  Clock: steady;
// each figure is the best of several runs of the whole loop.

namespace dynwfa::bench
{
  struct dispatch_report
  {
    std::size_t iterations = 0;
    /// Nanoseconds per iteration.
    double empty = 0;
    double static_call = 0;
    double virtual_call = 0;
    double dyn_call = 0;
  };

  /// is_proper on a lal_char(ab) -> b automaton, called through an empty
  /// loop, the static core, a virtual function, and the dyn registry.
  dispatch_report run_dispatch(std::size_t iterations, unsigned runs = 3);

  struct step_time
  {
    std::string step;
    /// Microseconds per call.
    double static_us = 0;
    double dyn_us = 0;
  };

  struct pipeline_report
  {
    std::size_t iterations = 0;
    std::vector<step_time> steps;
    double static_total() const;
    double dyn_total() const;
    /// Final results, for sanity checks.
    std::string static_expression;
    std::string dyn_expression;
    std::size_t static_states = 0;
    std::size_t dyn_states = 0;
  };

  /// thompson, proper, determinize, minimize, to_expression on \a expr
  /// over lal_char(abc) -> b, statically and through the dyn API.
  pipeline_report run_pipeline(std::size_t iterations,
                               const std::string& expr = "[abc]*[abc]*",
                               unsigned runs = 5);
}
