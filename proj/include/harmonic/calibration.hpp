#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "harmonic/space.hpp"

namespace harmonic::detail {

// Per-space constants computed on first use and never modified afterwards.
inline double cached_space_constant(const std::string& tag, const SpaceParams& s,
                                    const std::function<double()>& compute) {
    static std::recursive_mutex mutex;
    static std::map<std::tuple<std::string, int, int>, double> table;
    std::lock_guard lock(mutex);
    const auto key = std::make_tuple(tag, s.m_gamma, s.m_2gamma);
    if (auto it = table.find(key); it != table.end()) return it->second;
    const double v = compute();
    table.emplace(key, v);
    return v;
}

}  // namespace harmonic::detail
