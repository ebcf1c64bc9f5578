/*
   Copyright 2026 The layerpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "layerpoly/poly.hpp"

#include <functional>
#include <mutex>
#include <span>
#include <vector>

namespace layerpoly::detail {

// Lazily grown sequence of polynomials where entry m depends on entries < m.
// Readers always observe the same values regardless of interleaving.
class MemoTable {
public:
    using Step = std::function<Poly(std::size_t m, std::span<const Poly> previous)>;

    explicit MemoTable(Step step) : step_(std::move(step)) {}

    Poly get(std::size_t m) {
        std::lock_guard lock(mutex_);
        grow(m + 1);
        return entries_[m];
    }

    std::vector<Poly> prefix(std::size_t count) {
        std::lock_guard lock(mutex_);
        grow(count);
        return {entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(count)};
    }

private:
    void grow(std::size_t count) {
        while (entries_.size() < count) entries_.push_back(step_(entries_.size(), entries_));
    }

    Step step_;
    std::mutex mutex_;
    std::vector<Poly> entries_;
};

} // namespace layerpoly::detail
