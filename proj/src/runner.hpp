#pragma once

#include "report.hpp"

namespace paraq {

// Parses a rational "a/b" (or integer) and returns its exact square root,
// required because the spot-evaluation point is supplied as a value of q
// while the arithmetic lives in s = q^(1/2). Throws UsageError when the
// input is not a positive perfect square or the root hits {0, 1}.
Rational spot_root(const std::string& q_text);

}  // namespace paraq
