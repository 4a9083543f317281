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

#include "grover_mps/allocation.hpp"

namespace grover::numeric {

AllocationCounter &AllocationCounter::current() noexcept {
    thread_local AllocationCounter counter;
    return counter;
}

PeakProbe::PeakProbe() noexcept
    : baseline_(AllocationCounter::current().live), outer_peak_(AllocationCounter::current().peak) {
    AllocationCounter::current().peak = baseline_;
}

PeakProbe::~PeakProbe() {
    auto &c = AllocationCounter::current();
    if (outer_peak_ > c.peak) c.peak = outer_peak_;
}

std::int64_t PeakProbe::peak_entries() const noexcept { return AllocationCounter::current().peak; }

}  // namespace grover::numeric
