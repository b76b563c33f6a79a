#pragma once

#include "pfh/complex/io.hpp"
#include "pfh/complex/perturbed.hpp"
#include "pfh/complex/plus.hpp"
#include "pfh/complex/twisted_complex.hpp"
#include "pfh/errors.hpp"
#include "pfh/heegaard/diagram.hpp"
#include "pfh/heegaard/domains.hpp"
#include "pfh/heegaard/fixtures.hpp"
#include "pfh/heegaard/integer_lattice.hpp"
#include "pfh/linalg/homology.hpp"
#include "pfh/linalg/minors.hpp"
#include "pfh/linalg/rank.hpp"
#include "pfh/linalg/smith.hpp"
#include "pfh/models/combinatorics.hpp"
#include "pfh/models/fixtures.hpp"
#include "pfh/models/manifest.hpp"
#include "pfh/novikov/exponent.hpp"
#include "pfh/novikov/group_ring.hpp"
#include "pfh/novikov/novikov_polynomial.hpp"
#include "pfh/novikov/perturbation.hpp"
#include "pfh/reproduce.hpp"
