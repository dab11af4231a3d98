#pragma once

#include "ersim/routing/table_agent.hpp"

namespace ersim {

// DYMO: only the target answers a route request, and there is no local
// repair; a transit node that loses its next hop drops and reports.
class DymoAgent : public TableAgent {
 public:
  DymoAgent(NodeId id, Variant variant, ErsParams params, AgentOptions options, Network& net)
      : TableAgent(id, Protocol::kDymo, variant, std::move(params), options, net) {}

 protected:
  bool replies_from_table() const override { return false; }
};

}  // namespace ersim
