#pragma once

#include "hwobs/numerics.hpp"
#include "hwobs/hw_basis.hpp"
#include "hwobs/bloch.hpp"
#include "hwobs/commutation.hpp"
#include "hwobs/states.hpp"
#include "hwobs/acbound.hpp"
#include "hwobs/ramsey.hpp"
#include "hwobs/io.hpp"
#include "hwobs/golden.hpp"
