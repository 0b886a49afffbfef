#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "urbansir/config.hpp"
#include "urbansir/epidemic.hpp"

namespace urbansir {

/// One population and one social-network instance, shared by every
/// configuration of an experiment.
struct World {
  Territory territory;
  std::vector<Agent> agents;
  MixingMatrix mixing;
  Network network;
};

World build_world(const ExperimentConfig& cfg);

/// Resolves a placement mode to an index-case rule. Central is the most
/// populated tile, peripheral the retained tile farthest from the population
/// centroid, unless the config pins them.
IndexCaseSelection resolve_placement(const Placement& placement, const ExperimentConfig& cfg,
                                     const Territory& territory);

enum class Command { Build, Run, Scan, Place };

struct CommandOptions {
  bool emit_contact_log = false;
};

/// Executes a verb and writes its output tree under
/// <output_dir>/<verb>/, including manifest.json. Returns the manifest path.
std::filesystem::path run_command(Command command, const ExperimentConfig& cfg,
                                  const CommandOptions& options = {});

std::string to_string(Command command);

}  // namespace urbansir
