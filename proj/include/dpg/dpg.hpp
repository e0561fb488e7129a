#ifndef DPG_DPG_HPP
#define DPG_DPG_HPP

// Umbrella header for the discrete preference game engine.

#include "dpg/constructions.hpp"
#include "dpg/costs.hpp"
#include "dpg/dynamics.hpp"
#include "dpg/errors.hpp"
#include "dpg/graph.hpp"
#include "dpg/instance.hpp"
#include "dpg/io.hpp"
#include "dpg/metric.hpp"
#include "dpg/optimize.hpp"
#include "dpg/rational.hpp"
#include "dpg/treemed.hpp"

#endif // DPG_DPG_HPP
