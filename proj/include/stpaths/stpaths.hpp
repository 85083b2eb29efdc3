#ifndef STPATHS_STPATHS_HPP
#define STPATHS_STPATHS_HPP

#include "stpaths/enum_directed.hpp"
#include "stpaths/enum_undirected.hpp"
#include "stpaths/enumeration.hpp"
#include "stpaths/errors.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/io.hpp"
#include "stpaths/lcp.hpp"
#include "stpaths/oracle.hpp"
#include "stpaths/path.hpp"
#include "stpaths/shortest_paths.hpp"
#include "stpaths/unified_traversal.hpp"
#include "stpaths/weight.hpp"

#endif  // STPATHS_STPATHS_HPP
