#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "ersim/time.hpp"

namespace ersim {

enum class EventKind : std::uint8_t { kPacketDelivery, kTimer, kMobilityTick, kTrafficTick };

using EventId = std::uint64_t;

// Min-heap of callbacks ordered by (time, sequence). The sequence number is
// assigned at scheduling time, so simultaneous events run in the order they
// were scheduled.
class EventQueue {
 public:
  using Callback = std::function<void()>;

  SimTime now() const { return now_; }
  bool empty() const { return heap_.size() == cancelled_.size(); }
  std::size_t pending() const { return heap_.size() - cancelled_.size(); }
  std::uint64_t executed() const { return executed_; }

  // Throws if `at` precedes now().
  EventId schedule(SimTime at, EventKind kind, Callback callback);
  EventId schedule_in(Duration delay, EventKind kind, Callback callback) {
    return schedule(now_ + delay, kind, std::move(callback));
  }

  // Cancelling an already-executed or unknown id is a no-op.
  void cancel(EventId id);

  // Runs the earliest event whose time is <= limit. Returns false if none.
  bool step(SimTime limit);

  // Runs events up to and including `limit`, then advances the clock to it.
  void run_until(SimTime limit);

 private:
  struct Entry {
    SimTime time;
    EventId id;
    EventKind kind;
    Callback callback;
  };
  static bool later(const Entry& a, const Entry& b) {
    return a.time != b.time ? a.time > b.time : a.id > b.id;
  }

  std::vector<Entry> heap_;
  std::unordered_set<EventId> cancelled_;
  std::unordered_set<EventId> live_;
  SimTime now_{0};
  EventId next_id_ = 1;
  std::uint64_t executed_ = 0;
};

}  // namespace ersim
