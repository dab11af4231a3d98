#include "ersim/event_queue.hpp"

#include <algorithm>

#include "ersim/error.hpp"

namespace ersim {

EventId EventQueue::schedule(SimTime at, EventKind kind, Callback callback) {
  if (at < now_) {
    throw Error(ErrorCode::kInvalidArgument, "event scheduled in the past");
  }
  const EventId id = next_id_++;
  heap_.push_back(Entry{at, id, kind, std::move(callback)});
  std::push_heap(heap_.begin(), heap_.end(), later);
  live_.insert(id);
  return id;
}

void EventQueue::cancel(EventId id) {
  if (live_.erase(id) > 0) cancelled_.insert(id);
}

bool EventQueue::step(SimTime limit) {
  while (!heap_.empty()) {
    if (heap_.front().time > limit) return false;
    std::pop_heap(heap_.begin(), heap_.end(), later);
    Entry entry = std::move(heap_.back());
    heap_.pop_back();
    if (cancelled_.erase(entry.id) > 0) continue;
    live_.erase(entry.id);
    now_ = entry.time;
    ++executed_;
    entry.callback();
    return true;
  }
  return false;
}

void EventQueue::run_until(SimTime limit) {
  while (step(limit)) {
  }
  if (limit > now_) now_ = limit;
}

}  // namespace ersim
