#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dminor/json_io.hpp"

namespace dminor::experiments {

struct Params {
  std::uint64_t seed = 1;
  int n = 4;         // size parameter; meaning depends on the experiment
  int count = 20;    // number of random instances
  int random_size = 5;  // largest random host in oracle-equivalence
  std::int64_t budget = 2'000'000;
};

// Names accepted by run().
std::vector<std::string> names();

/// Runs one named experiment and returns its report. Instances may run in
/// parallel but are reported by instance index. Throws
/// std::invalid_argument for an unknown name or out-of-range parameters.
Json run(const std::string& name, const Params& params);

/// Minor-definition cross-check on a batch of hosts: every candidate pattern
/// (the union of the hosts' closures, plus all small simple digraphs) is
/// tested with find_minor against each host, and the positives must equal
/// the host's closure. Returns the number of hosts that disagree.
struct EquivalenceOutcome {
  int hosts = 0;
  int candidates = 0;
  int mismatches = 0;
  std::int64_t searches = 0;
};
EquivalenceOutcome check_minor_equivalence(const std::vector<Digraph>& hosts);

}  // namespace dminor::experiments
