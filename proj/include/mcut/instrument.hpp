#ifndef MCUT_INSTRUMENT_HPP
#define MCUT_INSTRUMENT_HPP

#include <cstdint>

// Primitive-operation counter used by the delay and incremental-time tests.
// Every graph traversal primitive charges one unit per vertex visited and
// one per adjacency entry scanned. The counter is per thread.
namespace mcut::instrument {

inline thread_local std::uint64_t work_units = 0;

inline void charge(std::uint64_t units = 1) noexcept { work_units += units; }

inline std::uint64_t work() noexcept { return work_units; }

inline void reset() noexcept { work_units = 0; }

}  // namespace mcut::instrument

#endif  // MCUT_INSTRUMENT_HPP
