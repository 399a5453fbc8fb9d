#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace qplab {

// Chunked parallel loop over [0, count). Each index is processed exactly
// once and workers write only to their own preallocated slots, so results
// are identical for every job count.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    std::size_t width = static_cast<std::size_t>(jobs);
    if (width <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (width > count) width = count;
    std::vector<std::thread> workers;
    workers.reserve(width);
    std::size_t chunk = (count + width - 1) / width;
    for (std::size_t w = 0; w < width; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&fn, begin, end] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace qplab
