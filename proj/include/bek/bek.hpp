#pragma once

#include "bek/betti_table.hpp"
#include "bek/classifier.hpp"
#include "bek/closedness.hpp"
#include "bek/enumerate.hpp"
#include "bek/graph.hpp"
#include "bek/graph_io.hpp"
#include "bek/hochster.hpp"
#include "bek/simplicial.hpp"
#include "bek/strand.hpp"
#include "bek/table_io.hpp"
