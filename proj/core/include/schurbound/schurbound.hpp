#pragma once

#include "schurbound/apps.hpp"
#include "schurbound/certify.hpp"
#include "schurbound/error.hpp"
#include "schurbound/matrix.hpp"
#include "schurbound/random.hpp"
#include "schurbound/spectral.hpp"
#include "schurbound/submatrix.hpp"
