#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urbansir/epidemic.hpp"
#include "urbansir/metrics.hpp"

namespace urbansir {

/// Opens a file for writing, creating parent directories. Throws InputError
/// when the file cannot be created.
std::ofstream open_output(const std::filesystem::path& path);
std::ifstream open_input(const std::filesystem::path& path);

// Agent table: id,tile,age_group,fitness,household
void write_agents(std::ostream& out, std::span<const Agent> agents);
std::vector<Agent> read_agents(std::istream& in, const std::string& source);

// Edge list: u,v,layer with layer in {H, A}
void write_edges(std::ostream& out, const SocialGraph& graph);
struct EdgeLists {
  std::vector<Edge> household;
  std::vector<Edge> acquaintance;
};
EdgeLists read_edges(std::istream& in, const std::string& source);

// Event log: agent,infection_day,infector,recovery_day
void write_events(std::ostream& out, const SimulationResult& result);
// Daily aggregates: t,S,I,R,new_infections
void write_daily(std::ostream& out, const SimulationResult& result);
// Wide per-stratum prevalence: t,<column...>
void write_wide(std::ostream& out, const StratifiedCounts& counts, std::span<const std::string> columns);

/// Streams daily contact sets as t,u,v,layer.
class ContactLogWriter {
 public:
  explicit ContactLogWriter(std::ostream& out);
  void operator()(const ContactSet& day);

 private:
  std::ostream& out_;
};

/// Long-format metric table: config,replica[,replica_b],<index>,value.
/// `replica` is a replica number, or "all" for cross-replica aggregates.
class TidyTable {
 public:
  explicit TidyTable(std::string index_column, bool paired = false);

  void add(std::string_view config, std::string_view replica, std::string_view index, double value);
  void add(std::string_view config, std::size_t replica, double index, double value);
  void add_pair(std::string_view config, std::size_t a, std::size_t b, double index, double value);

  std::size_t size() const { return rows_.size(); }
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

 private:
  std::string index_column_;
  bool paired_;
  std::vector<std::string> rows_;
};

}  // namespace urbansir
