#pragma once

#include "hwm/anticirculant.hpp"
#include "hwm/cayley.hpp"
#include "hwm/classify.hpp"
#include "hwm/cvcs.hpp"
#include "hwm/error.hpp"
#include "hwm/families.hpp"
#include "hwm/graph.hpp"
#include "hwm/graph_io.hpp"
#include "hwm/isomorphism.hpp"
#include "hwm/matcore.hpp"
#include "hwm/matrix.hpp"
#include "hwm/matrix_io.hpp"
#include "hwm/search.hpp"
#include "hwm/search_driver.hpp"
#include "hwm/solvers.hpp"

namespace hwm {
inline constexpr const char* kVersion = "0.1.0";
}
