#pragma once

#include "chromatic/base.hpp"
#include "chromatic/bond_lattice.hpp"
#include "chromatic/chromatic_poly.hpp"
#include "chromatic/csf.hpp"
#include "chromatic/edgelist.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"
#include "chromatic/isf.hpp"
#include "chromatic/jsonio.hpp"
#include "chromatic/orientation.hpp"
