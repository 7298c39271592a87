#pragma once

// Umbrella header: standing waves of the quintic focusing NLS on the
// tadpole graph (a ring with one attached half-line).

#include "tadpole/errors.hpp"
#include "tadpole/roots.hpp"
#include "tadpole/scalar_model.hpp"
#include "tadpole/quadrature.hpp"
#include "tadpole/ode.hpp"
#include "tadpole/elliptic.hpp"
#include "tadpole/wave_family.hpp"
#include "tadpole/critical.hpp"
#include "tadpole/asymptotics.hpp"
#include "tadpole/linearized.hpp"
#include "tadpole/spectrum.hpp"
#include "tadpole/config.hpp"
#include "tadpole/io.hpp"
#include "tadpole/verify.hpp"
