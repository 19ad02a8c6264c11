#pragma once

#include <functional>
#include <string>

#include "prymlab/candidates.hpp"
#include "prymlab/catalog.hpp"
#include "prymlab/cover_io.hpp"
#include "prymlab/facts.hpp"

namespace testsupport {

inline prymlab::CoverDatum fixture(const std::string& name) {
  return prymlab::load_cover(std::string(PRYMLAB_FIXTURES) + "/" + name + ".json");
}

// Every built candidate over every catalog base in the given space.
inline int for_each_candidate(const prymlab::CandidateSpace& space,
                              const std::function<void(const std::string&, const prymlab::CoverDatum&,
                                                       const std::vector<prymlab::ComponentProfile>&)>& fn) {
  int n = 0;
  for (const auto& b : prymlab::stable_genus2_catalog())
    for (const auto& bp : prymlab::enumerate_blueprints(b.graph, space)) {
      auto r = prymlab::build_candidate(b.graph, bp);
      if (!r.cover) continue;
      fn(b.label, *r.cover, r.profiles);
      ++n;
    }
  return n;
}

// No component violates a Riemann-existence entry of the fact table.
inline bool realizable(const std::vector<prymlab::ComponentProfile>& profiles) {
  for (const auto& p : profiles)
    if (prymlab::existence_facts().component_obstruction(p)) return false;
  return true;
}

inline prymlab::CandidateSpace full_space() { return {true, true}; }

}  // namespace testsupport
