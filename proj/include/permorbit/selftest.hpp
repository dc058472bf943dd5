#pragma once

// Worked examples with published values, one check each.

#include "permorbit/automorphisms.hpp"
#include "permorbit/report.hpp"

namespace permorbit::selftest {

VerificationReport run(const AutOptions& options = {});

}  // namespace permorbit::selftest
