#pragma once

namespace sumstruct {

// Resource caps for the dense dynamic programs and enumerations.  Defaults
// are sized for desk-scale runs; override via set_config() or the
// SUMSTRUCT_* environment variables handled by the CLI.
struct RunConfig {
    long long max_hm = 10'000'000;          // densest 1-d table row (h*m)
    long long max_t = 1'000'000;            // largest t for full verification
    long long max_lattice_points = 2'000'000;
    long long max_table_entries = 50'000'000; // cells across a parts table
    long long max_enumeration = 1'000'000'000;
    int witness_limit = 32;                 // truncation in serialized reports
    int parallelism = 1;
};

RunConfig& config();
void apply_env_overrides(RunConfig& cfg);

} // namespace sumstruct
