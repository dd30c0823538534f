#pragma once

#include "seaweed/block_poset.hpp"
#include "seaweed/enumerate.hpp"
#include "seaweed/invariants.hpp"
#include "seaweed/matrix_oracle.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/modular.hpp"
#include "seaweed/notation.hpp"
#include "seaweed/poset.hpp"
#include "seaweed/render.hpp"
#include "seaweed/verify.hpp"
#include "seaweed/weighted_meander.hpp"
