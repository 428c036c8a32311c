#pragma once

#include "extquot/automorphism.hpp"
#include "extquot/bernstein/cases.hpp"
#include "extquot/bernstein/partition.hpp"
#include "extquot/catalog.hpp"
#include "extquot/fixed_set.hpp"
#include "extquot/grid_oracle.hpp"
#include "extquot/group.hpp"
#include "extquot/poincare.hpp"
#include "extquot/smith.hpp"
