// Umbrella header: the full diamone public API.
#pragma once

#include "diamone/analysis.hpp"
#include "diamone/betti_table.hpp"
#include "diamone/checked_arith.hpp"
#include "diamone/components.hpp"
#include "diamone/errors.hpp"
#include "diamone/five_tuple.hpp"
#include "diamone/liaison.hpp"
#include "diamone/reduction.hpp"
#include "diamone/table_ops.hpp"
