#pragma once

#include "rhc/bounded_subgraph.hpp"
#include "rhc/container.hpp"
#include "rhc/container_family.hpp"
#include "rhc/eligibility.hpp"
#include "rhc/embedding.hpp"
#include "rhc/entropy.hpp"
#include "rhc/graph.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/json_io.hpp"
#include "rhc/params.hpp"
#include "rhc/permutations.hpp"
#include "rhc/rational.hpp"
#include "rhc/rng.hpp"
#include "rhc/set_family.hpp"
#include "rhc/spectral.hpp"
#include "rhc/supersat.hpp"
#include "rhc/synthetic.hpp"
#include "rhc/text_io.hpp"
#include "rhc/unionfree.hpp"
#include "rhc/vertex_set.hpp"
