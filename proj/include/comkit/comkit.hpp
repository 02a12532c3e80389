#pragma once

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/euler_amalgam.hpp"
#include "comkit/generation.hpp"
#include "comkit/io.hpp"
#include "comkit/limits.hpp"
#include "comkit/minors.hpp"
#include "comkit/ranking.hpp"
#include "comkit/realize.hpp"
#include "comkit/sign_system.hpp"
#include "comkit/sign_vector.hpp"
#include "comkit/substructures.hpp"
#include "comkit/topes.hpp"
