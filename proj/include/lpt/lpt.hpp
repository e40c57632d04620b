#ifndef LPT_LPT_HPP
#define LPT_LPT_HPP

#include "lpt/block_cut_tree.hpp"
#include "lpt/canon.hpp"
#include "lpt/checks.hpp"
#include "lpt/connectivity.hpp"
#include "lpt/enumerate_graphs.hpp"
#include "lpt/errors.hpp"
#include "lpt/experiments.hpp"
#include "lpt/flow.hpp"
#include "lpt/generators.hpp"
#include "lpt/graph.hpp"
#include "lpt/io.hpp"
#include "lpt/lemmas/cubic.hpp"
#include "lpt/lemmas/distant_pairs.hpp"
#include "lpt/lemmas/inequality.hpp"
#include "lpt/lemmas/intersect.hpp"
#include "lpt/lemmas/longest_object.hpp"
#include "lpt/lemmas/matching.hpp"
#include "lpt/lemmas/nice_hitting.hpp"
#include "lpt/lemmas/separate.hpp"
#include "lpt/lemmas/weighted_cycle.hpp"
#include "lpt/linear_decomposition.hpp"
#include "lpt/longest.hpp"
#include "lpt/random.hpp"
#include "lpt/report.hpp"
#include "lpt/society.hpp"
#include "lpt/transversal.hpp"
#include "lpt/tree_decomposition.hpp"
#include "lpt/vt.hpp"

#endif  // LPT_LPT_HPP
