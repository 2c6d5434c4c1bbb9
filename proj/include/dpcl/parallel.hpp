/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dpcl {

inline unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// results in input order; the first exception (by index) is rethrown
template <class R, class F>
std::vector<R> parallel_map(size_t count, F fn, unsigned workers = 1) {
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errs(count);
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (w <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < w; ++k) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace dpcl
