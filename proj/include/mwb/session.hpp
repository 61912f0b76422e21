#pragma once

// Mutation sessions: an origin plus a vertex history, replayed on demand.
// The store serializes operations per session and can snapshot to a directory.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwb/presets.hpp"

namespace mwb {

class SessionNotFound : public Error {
 public:
  using Error::Error;
};

/// Undo with an empty history.
class EmptyHistory : public Error {
 public:
  using Error::Error;
};

struct SessionState {
  std::string id;
  Construction origin;
  std::vector<int> history;
  Seed current;
};

/// Seed reached from the origin by mutating along `history`.
Seed replay(const Construction& origin, const std::vector<int>& history);

/// {"id","origin","history","seed"}; "seed" is the seed_view of the current seed.
nlohmann::json to_json(const SessionState& s);
/// Inverse of to_json; the current seed is recomputed by replay.
SessionState session_from_json(const nlohmann::json& j);

class SessionStore {
 public:
  /// With a state directory every change is written to <dir>/<id>.json and
  /// existing snapshots are loaded.
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);

  nlohmann::json create(const nlohmann::json& origin);
  nlohmann::json get(const std::string& id) const;
  /// Throws SessionNotFound, FrozenVertex, IndexOutOfRange.
  nlohmann::json mutate(const std::string& id, int vertex);
  /// Throws EmptyHistory when there is nothing to undo.
  nlohmann::json undo(const std::string& id);
  nlohmann::json history(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  struct Entry {
    std::mutex m;
    SessionState state;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  void persist(const SessionState& s) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  long next_id_ = 1;
};

}  // namespace mwb
