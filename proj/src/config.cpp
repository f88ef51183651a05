#include "skeinlab/config.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace skeinlab {

void SessionConfig::validate() const {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
    if (cyclotomic_order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    if (state_cap == 0 || orbit_cap == 0) throw std::invalid_argument("caps must be positive");
    if (threads < 0) throw std::invalid_argument("thread count must be nonnegative");
}

void SessionConfig::merge(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "N") n = value.get<long>();
        else if (key == "cyclotomicOrder") cyclotomic_order = value.get<int>();
        else if (key == "genus") genus = value.get<int>();
        else if (key == "stateCap") state_cap = value.get<std::size_t>();
        else if (key == "orbitCap") orbit_cap = value.get<std::size_t>();
        else if (key == "threads") threads = value.get<int>();
        else if (key == "fixtures") fixtures_dir = value.get<std::string>();
        else throw std::invalid_argument("unknown config key \"" + key + "\"");
    }
    validate();
}

void SessionConfig::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    merge(nlohmann::json::parse(in));
}

void SessionConfig::merge_environment() {
    if (const char* v = std::getenv("SKEINLAB_THREADS"); v && *v) {
        char* end = nullptr;
        const long t = std::strtol(v, &end, 10);
        if (*end != '\0' || t < 0) throw std::invalid_argument("SKEINLAB_THREADS must be a nonnegative integer");
        threads = static_cast<int>(t);
    }
}

void SessionConfig::apply() const {
    if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace skeinlab
