#pragma once

#include "srl/algebra.hpp"
#include "srl/catalog.hpp"
#include "srl/cones.hpp"
#include "srl/document.hpp"
#include "srl/dot.hpp"
#include "srl/duality.hpp"
#include "srl/enumerate.hpp"
#include "srl/errors.hpp"
#include "srl/filters.hpp"
#include "srl/homomorphism.hpp"
#include "srl/parallel.hpp"
#include "srl/reflection.hpp"
#include "srl/subalgebra.hpp"
#include "srl/subset.hpp"
#include "srl/term.hpp"
#include "srl/varieties.hpp"
