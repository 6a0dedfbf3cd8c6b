#pragma once

#include "toricg/numeric.hpp"
#include "toricg/polynomial.hpp"
#include "toricg/vertex_set.hpp"
#include "toricg/face_lattice.hpp"
#include "toricg/isomorphism.hpp"
#include "toricg/linalg.hpp"
#include "toricg/geometry.hpp"
#include "toricg/toric.hpp"
#include "toricg/shelling.hpp"
#include "toricg/rigidity.hpp"
#include "toricg/localization.hpp"
#include "toricg/verma.hpp"
#include "toricg/catalog.hpp"
#include "toricg/io.hpp"
