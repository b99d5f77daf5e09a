#include "sumstruct/config.hpp"

#include <cstdlib>
#include <string>

namespace sumstruct {

RunConfig& config() {
    static RunConfig cfg;
    return cfg;
}

static void read_ll(const char* name, long long& target) {
    if (const char* v = std::getenv(name)) {
        try {
            target = std::stoll(v);
        } catch (...) {
            // ignore malformed overrides
        }
    }
}

static void read_int(const char* name, int& target) {
    long long v = target;
    read_ll(name, v);
    target = static_cast<int>(v);
}

void apply_env_overrides(RunConfig& cfg) {
    read_ll("SUMSTRUCT_MAX_HM", cfg.max_hm);
    read_ll("SUMSTRUCT_MAX_T", cfg.max_t);
    read_ll("SUMSTRUCT_MAX_POINTS", cfg.max_lattice_points);
    read_ll("SUMSTRUCT_MAX_TABLE", cfg.max_table_entries);
    read_ll("SUMSTRUCT_MAX_ENUM", cfg.max_enumeration);
    read_int("SUMSTRUCT_WITNESS_LIMIT", cfg.witness_limit);
    read_int("SUMSTRUCT_PARALLELISM", cfg.parallelism);
}

} // namespace sumstruct
