#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>

namespace skeinlab {

struct SessionConfig {
    long n = 5;
    int cyclotomic_order = 4;
    int genus = 1;
    std::size_t state_cap = 24;
    std::size_t orbit_cap = 10000;
    int threads = 0;  // 0 keeps the OpenMP default
    std::string fixtures_dir;

    // Throws std::invalid_argument on an even or too small N or a zero cap.
    void validate() const;
    // Overrides fields present in the object; unknown keys are rejected.
    void merge(const nlohmann::json& j);
    void merge_file(const std::string& path);
    // SKEINLAB_THREADS, when set.
    void merge_environment();
    // Applies the thread count to the OpenMP runtime.
    void apply() const;
};

}  // namespace skeinlab
