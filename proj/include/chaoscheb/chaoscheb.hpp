#pragma once

#include "chaoscheb/attack.hpp"
#include "chaoscheb/bench.hpp"
#include "chaoscheb/chebyshev.hpp"
#include "chaoscheb/cryptosystem.hpp"
#include "chaoscheb/elliptic.hpp"
#include "chaoscheb/errors.hpp"
#include "chaoscheb/index.hpp"
#include "chaoscheb/protocols.hpp"
#include "chaoscheb/realnum.hpp"
#include "chaoscheb/rng.hpp"
#include "chaoscheb/textio.hpp"
