#ifndef MCUT_MCUT_HPP
#define MCUT_MCUT_HPP

#include "mcut/graph.hpp"
#include "mcut/instrument.hpp"
#include "mcut/io.hpp"
#include "mcut/line_graph.hpp"
#include "mcut/multicut.hpp"
#include "mcut/multiway_edge.hpp"
#include "mcut/multiway_node.hpp"
#include "mcut/oracle.hpp"
#include "mcut/separators.hpp"
#include "mcut/solution.hpp"
#include "mcut/steiner.hpp"
#include "mcut/terminals.hpp"

#endif  // MCUT_MCUT_HPP
