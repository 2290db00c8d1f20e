#pragma once

#include <optional>
#include <string>
#include <utility>

namespace drg {

// Result-or-diagnostic carrier. Infeasible inputs are data, not crashes:
// callers inspect ok() and either read the value or the error text.
template <typename T>
struct Fallible {
    std::optional<T> value;
    std::string error;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }

    static Fallible success(T v) { return Fallible{std::move(v), {}}; }
    static Fallible failure(std::string why) { return Fallible{std::nullopt, std::move(why)}; }
};

}  // namespace drg
