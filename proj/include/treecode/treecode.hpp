#pragma once

#include "treecode/bounds.hpp"
#include "treecode/code.hpp"
#include "treecode/constructions.hpp"
#include "treecode/errors.hpp"
#include "treecode/field.hpp"
#include "treecode/graph.hpp"
#include "treecode/io.hpp"
#include "treecode/oracle.hpp"
#include "treecode/prufer.hpp"
#include "treecode/rng.hpp"
#include "treecode/selfcheck.hpp"
#include "treecode/tables.hpp"
