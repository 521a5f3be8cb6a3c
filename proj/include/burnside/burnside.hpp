#pragma once

#include "burnside/scalar.hpp"
#include "burnside/matrix.hpp"
#include "burnside/polynomial.hpp"
#include "burnside/graph.hpp"
#include "burnside/oracle.hpp"
#include "burnside/criteria.hpp"
#include "burnside/kippenhahn.hpp"
