#pragma once

#include "knotoid/error.hpp"
#include "knotoid/gauss_diagram.hpp"
#include "knotoid/gko.hpp"
#include "knotoid/gordian.hpp"
#include "knotoid/invariant.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/vassiliev.hpp"
#include "knotoid/zpoly.hpp"
