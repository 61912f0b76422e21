#include "mwb/session.hpp"

#include <fstream>

namespace mwb {

Seed replay(const Construction& origin, const std::vector<int>& history) {
  return mutate_path(origin.seed, history);
}

nlohmann::json to_json(const SessionState& s) {
  return {{"id", s.id},
          {"origin", s.origin.origin},
          {"history", s.history},
          {"seed", seed_view(s.origin, s.current)}};
}

SessionState session_from_json(const nlohmann::json& j) {
  try {
    SessionState s{j.at("id").get<std::string>(), construct(j.at("origin")),
                   j.value("history", std::vector<int>{}), {}};
    s.current = replay(s.origin, s.history);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed session: ") + e.what());
  }
}

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir) : dir_(std::move(state_dir)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  for (const auto& f : std::filesystem::directory_iterator(*dir_)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path());
    auto s = session_from_json(nlohmann::json::parse(in));
    if (s.id.size() > 1 && s.id[0] == 's') {
      try {
        next_id_ = std::max(next_id_, std::stol(s.id.substr(1)) + 1);
      } catch (const std::exception&) {
      }
    }
    auto e = std::make_shared<Entry>();
    e->state = std::move(s);
    sessions_.emplace(e->state.id, e);
  }
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound("unknown session '" + id + "'");
  return it->second;
}

void SessionStore::persist(const SessionState& s) const {
  if (!dir_) return;
  const auto target = *dir_ / (s.id + ".json");
  const auto tmp = *dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"id", s.id}, {"origin", s.origin.origin}, {"history", s.history}}.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

nlohmann::json SessionStore::create(const nlohmann::json& origin) {
  auto e = std::make_shared<Entry>();
  e->state.origin = construct(origin);
  e->state.current = e->state.origin.seed;
  {
    std::unique_lock lock(map_mutex_);
    e->state.id = "s" + std::to_string(next_id_++);
    sessions_.emplace(e->state.id, e);
  }
  std::lock_guard g(e->m);
  persist(e->state);
  return to_json(e->state);
}

nlohmann::json SessionStore::get(const std::string& id) const {
  auto e = find(id);
  std::lock_guard g(e->m);
  return to_json(e->state);
}

nlohmann::json SessionStore::mutate(const std::string& id, int vertex) {
  auto e = find(id);
  std::lock_guard g(e->m);
  e->state.current = mwb::mutate(e->state.current, vertex);
  e->state.history.push_back(vertex);
  persist(e->state);
  return to_json(e->state);
}

nlohmann::json SessionStore::undo(const std::string& id) {
  auto e = find(id);
  std::lock_guard g(e->m);
  if (e->state.history.empty()) throw EmptyHistory("nothing to undo");
  e->state.history.pop_back();
  e->state.current = replay(e->state.origin, e->state.history);
  persist(e->state);
  return to_json(e->state);
}

nlohmann::json SessionStore::history(const std::string& id) const {
  auto e = find(id);
  std::lock_guard g(e->m);
  auto j = to_json(e->state);
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < e->state.history.size(); ++i)
    steps.push_back({{"step", i + 1}, {"vertex", e->state.history[i]}});
  j["steps"] = std::move(steps);
  return j;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(map_mutex_);
  std::vector<std::string> out;
  for (const auto& [id, e] : sessions_) out.push_back(id);
  return out;
}

}  // namespace mwb
