// Copyright 2026 The grover-mps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVER_MPS_ALLOCATION_HPP
#define GROVER_MPS_ALLOCATION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace grover::numeric {

/// Per-thread count of live complex entries held by tracked containers.
/// A simulation run lives entirely on one thread, so the thread-local view is
/// exactly the footprint of that run.
struct AllocationCounter {
    std::int64_t live = 0;
    std::int64_t peak = 0;

    static AllocationCounter &current() noexcept;
};

/// Reports the high-water mark of live entries reached during its lifetime.
/// Probes nest: an enclosing probe still sees peaks reached inside an inner one.
class PeakProbe {
  public:
    PeakProbe() noexcept;
    ~PeakProbe();
    PeakProbe(const PeakProbe &) = delete;
    PeakProbe &operator=(const PeakProbe &) = delete;

    std::int64_t peak_entries() const noexcept;
    std::int64_t baseline_entries() const noexcept { return baseline_; }

  private:
    std::int64_t baseline_;
    std::int64_t outer_peak_;
};

template <typename T>
class TrackingAllocator {
  public:
    using value_type = T;

    TrackingAllocator() noexcept = default;
    template <typename U>
    TrackingAllocator(const TrackingAllocator<U> &) noexcept {}

    T *allocate(std::size_t n) {
        T *p = std::allocator<T>{}.allocate(n);
        auto &c = AllocationCounter::current();
        c.live += static_cast<std::int64_t>(n);
        if (c.live > c.peak) c.peak = c.live;
        return p;
    }

    void deallocate(T *p, std::size_t n) noexcept {
        AllocationCounter::current().live -= static_cast<std::int64_t>(n);
        std::allocator<T>{}.deallocate(p, n);
    }

    template <typename U>
    bool operator==(const TrackingAllocator<U> &) const noexcept {
        return true;
    }
};

template <typename T>
using tracked_vector = std::vector<T, TrackingAllocator<T>>;

}  // namespace grover::numeric

#endif
