#include "ersim/routing/route_cache.hpp"

#include <algorithm>
#include <unordered_set>

#include "ersim/error.hpp"

namespace ersim {

bool valid_source_route(const SourceRoute& route) {
  if (route.size() < 2) return false;
  std::unordered_set<NodeId> seen(route.begin(), route.end());
  return seen.size() == route.size();
}

RouteCache::RouteCache(NodeId owner, std::size_t capacity) : owner_(owner), capacity_(capacity) {
  if (capacity == 0) throw Error(ErrorCode::kInvalidArgument, "tap_cache_size must be >= 1");
}

void RouteCache::index(const SourceRoute& path, std::size_t from_len, int delta) {
  SourceRoute prefix(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(from_len) - 1);
  for (std::size_t len = from_len; len <= path.size(); ++len) {
    prefix.push_back(path[len - 1]);
    auto it = prefixes_.try_emplace(prefix, 0).first;
    if ((it->second += delta) == 0) prefixes_.erase(it);
  }
}

bool RouteCache::insert(const SourceRoute& path, SimTime now) {
  if (!valid_source_route(path) || path.front() != owner_) return false;
  if (prefixes_.contains(path)) return false;
  if (paths_.size() >= capacity_) {
    index(paths_.front().path, 2, -1);
    paths_.pop_front();
  }
  paths_.push_back({path, now});
  index(path, 2, +1);
  high_water_ = std::max(high_water_, paths_.size());
  return true;
}

std::optional<SourceRoute> RouteCache::find(NodeId destination) const {
  const Entry* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& e : paths_) {
    auto it = std::find(e.path.begin() + 1, e.path.end(), destination);
    if (it == e.path.end()) continue;
    const auto len = static_cast<std::size_t>(it - e.path.begin()) + 1;
    if (best == nullptr || len <= best_len) {
      best = &e;
      best_len = len;
    }
  }
  if (best == nullptr) return std::nullopt;
  return SourceRoute(best->path.begin(), best->path.begin() + static_cast<std::ptrdiff_t>(best_len));
}

std::size_t RouteCache::purge_link(NodeId a, NodeId b) {
  std::size_t touched = 0;
  for (auto& e : paths_) {
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
      const NodeId u = e.path[i], v = e.path[i + 1];
      if ((u == a && v == b) || (u == b && v == a)) {
        index(e.path, i + 2, -1);
        e.path.resize(i + 1);
        ++touched;
        break;
      }
    }
  }
  std::erase_if(paths_, [](const Entry& e) { return e.path.size() < 2; });
  return touched;
}

}  // namespace ersim
