#pragma once

#include "topclose/bfs_cut.hpp"
#include "topclose/bounds.hpp"
#include "topclose/components.hpp"
#include "topclose/generators.hpp"
#include "topclose/graph.hpp"
#include "topclose/metrics.hpp"
#include "topclose/reachability.hpp"
#include "topclose/scc_dag.hpp"
#include "topclose/textbook.hpp"
#include "topclose/threshold.hpp"
#include "topclose/top_k.hpp"
