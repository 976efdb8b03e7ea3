#pragma once

#include "cstar/errors.hpp"
#include "cstar/exactmath/factored_rational.hpp"
#include "cstar/exactmath/int_matrix.hpp"
#include "cstar/exactmath/parse.hpp"
#include "cstar/exactmath/poly2.hpp"
#include "cstar/exactmath/rational.hpp"
#include "cstar/exactmath/smith.hpp"
#include "cstar/divisor/pair.hpp"
#include "cstar/divisor/qdivisor.hpp"
#include "cstar/dpd/invariants.hpp"
#include "cstar/dpd/presentation.hpp"
#include "cstar/toric/toric.hpp"
#include "cstar/deriv/derivation.hpp"
#include "cstar/deriv/jordan.hpp"
#include "cstar/deriv/normalize.hpp"
#include "cstar/deriv/ring_map.hpp"
#include "cstar/classify/recognize.hpp"
#include "cstar/io/json_io.hpp"
