#pragma once

// Brute-force ground truth. Enumerates every model structure with a given
// weak-equivalence class without using the recognition theorem or centers,
// and generates reproducible random instances to compare against.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "posetmc/model.hpp"
#include "posetmc/relative.hpp"

namespace posetmc {

struct OracleLimits {
  std::size_t max_elements = 10;
  std::size_t max_weq = 14;  // non-identity weak equivalences; at most 64
};

// Every model structure with weak equivalences rel.weq(), ordered by
// (cof pairs, fib pairs). Candidate acyclic-cofibration classes are the
// composition- and pushout-closed classes between the identities and W;
// each determines fib = A^⧄ and cof = ^⧄(fib∩we). Throws CapExceeded.
std::vector<ModelStruct> enumerate_model_structures(const std::shared_ptr<const RelStruct>& rel,
                                                    const OracleLimits& limits = {});

bool decide_by_enumeration(const std::shared_ptr<const RelStruct>& rel, const OracleLimits& limits = {});

// Number of closed candidate classes visited by the enumeration.
std::size_t count_candidate_classes(const std::shared_ptr<const RelStruct>& rel, const OracleLimits& limits = {});

struct InstanceGen {
  std::uint64_t seed = 0;
  std::size_t min_elements = 2;
  std::size_t max_elements = 7;
  double order_density = 0.35;
  double weq_density = 0.4;
  std::size_t max_weq = 10;
  // Probability of closing the sampled W under factors, which makes strong
  // 2-of-3 hold.
  double factor_closure_probability = 0.5;
  bool require_s2of3 = false;
};

// Random bounded lattices (random orders, rejected until they are lattices)
// with random composition-closed W. Identical generators give identical
// streams.
class InstanceStream {
 public:
  explicit InstanceStream(InstanceGen gen);
  std::shared_ptr<const RelStruct> next();

 private:
  InstanceGen gen_;
  std::mt19937_64 rng_;
};

std::vector<std::shared_ptr<const RelStruct>> random_instances(const InstanceGen& gen, std::size_t count);

}  // namespace posetmc
