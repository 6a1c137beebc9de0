#pragma once

#include "gerechte/framework.hpp"
#include "gerechte/generate.hpp"
#include "gerechte/graph.hpp"
#include "gerechte/latin.hpp"
#include "gerechte/outline.hpp"
#include "gerechte/realize.hpp"
#include "gerechte/verify.hpp"
