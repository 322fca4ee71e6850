#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "posetmc/io.hpp"

namespace posetmc {

// Built-in instances:
//   two-structures  0 < A < B, B' < C < *, W = every morphism among A, B, B', C
//   forced          the nine-element lattice whose structure is forced
//   trunc-N         N copies of the forced gadget strung along A0 < ... < AN, 1 <= N <= 4
//   s2of3-fail      a < b < c with W = {a -> c}
//   chain-N         bot < m1 < ... < mN < top, W = every morphism among the m's, 1 <= N <= 32
// Throws UnknownFixture.
InstanceFile fixture(std::string_view name);
std::vector<std::string> fixture_names();  // with N instantiated as in the examples above
std::shared_ptr<const RelStruct> fixture_rel(std::string_view name);

}  // namespace posetmc
