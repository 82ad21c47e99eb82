#pragma once

#include "catalog.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "friendship.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "invariants.hpp"
#include "prime_field.hpp"
#include "spectral.hpp"
#include "srg_params.hpp"
#include "subgraph.hpp"
#include "theta.hpp"
#include "theta_sdp.hpp"
