#pragma once

#include "linkq/coloring.hpp"
#include "linkq/diagram.hpp"
#include "linkq/error.hpp"
#include "linkq/groups.hpp"
#include "linkq/invariants.hpp"
#include "linkq/lattice.hpp"
#include "linkq/limits.hpp"
#include "linkq/linking.hpp"
#include "linkq/quandle.hpp"
#include "linkq/tcquandle.hpp"
