#ifndef SICACHE_SRC_EXPERIMENT_INTERNAL_H_
#define SICACHE_SRC_EXPERIMENT_INTERNAL_H_

#include <cstdint>

#include "sicache/experiment.h"
#include "sicache/simulator.h"

namespace sicache::internal {

// Requires spec.simulation.
SimConfig simulation_config(const ExperimentSpec& spec, int max_layers, std::uint64_t seed);

}  // namespace sicache::internal

#endif  // SICACHE_SRC_EXPERIMENT_INTERNAL_H_
