#pragma once

// Everything at once.

#include "abelian_lattice.hpp"
#include "ar_quiver.hpp"
#include "character_table.hpp"
#include "cyclotomic.hpp"
#include "deformed_preprojective.hpp"
#include "finite_group.hpp"
#include "fixtures.hpp"
#include "hypersurface_ktheory.hpp"
#include "invariant_rings.hpp"
#include "knitting.hpp"
#include "verify.hpp"
