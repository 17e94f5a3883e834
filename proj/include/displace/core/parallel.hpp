#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace displace {

/// Smallest index in [0, count) satisfying `predicate`, or nullopt.
///
/// The range is split into contiguous chunks handed to `jobs` worker threads;
/// workers abandon chunks above the best hit found so far. The answer is the
/// same for every value of `jobs`.
std::optional<std::uint64_t> parallel_first_index(std::uint64_t count, unsigned jobs,
                                                  const std::function<bool(std::uint64_t)>& predicate);

}  // namespace displace
