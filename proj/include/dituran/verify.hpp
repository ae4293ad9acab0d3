#pragma once

#include <string>
#include <vector>

#include "dituran/search.hpp"

namespace dituran {

struct VerifyReport {
  std::string id;
  bool passed = true;
  bool complete = true;
  std::vector<std::string> lines;
};

// Ids: 3path, pk-small, ck, cn, p13-small, p13-9, anticycle, lemma-orient,
// lemma-subgraph, p4, sandwich, zarankiewicz, engine. long_mode extends the
// grids to the larger orders. Throws InvalidParameters for unknown ids.
VerifyReport run_verification(const std::string& id, bool long_mode, const SearchOptions& opt = {});

const std::vector<std::string>& verification_ids();

}  // namespace dituran
