// fbword - finite basis decisions for Dilworth monoids S(W)
//
// Umbrella header. serialize.hpp is separate because it needs nlohmann/json.

#pragma once

#include "classifier.hpp"
#include "identity.hpp"
#include "match.hpp"
#include "monoid.hpp"
#include "precedence.hpp"
#include "sigma.hpp"
#include "sweep.hpp"
#include "witness.hpp"
#include "word.hpp"
