#pragma once

#include "cutglue/bigint.hpp"
#include "cutglue/certificate.hpp"
#include "cutglue/configuration.hpp"
#include "cutglue/congruence.hpp"
#include "cutglue/construct.hpp"
#include "cutglue/lorentz.hpp"
#include "cutglue/matrix.hpp"
#include "cutglue/number_theory.hpp"
#include "cutglue/quadratic_field.hpp"
#include "cutglue/recheck.hpp"
#include "cutglue/subring.hpp"
#include "cutglue/trace.hpp"

namespace cutglue {
inline constexpr const char* version = "0.1.0";
}
