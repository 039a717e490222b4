#pragma once

#include "oceval/advisor.hpp"
#include "oceval/checks.hpp"
#include "oceval/graph.hpp"
#include "oceval/model.hpp"
#include "oceval/octree.hpp"
#include "oceval/parser.hpp"
#include "oceval/phase.hpp"
#include "oceval/profile_io.hpp"
#include "oceval/replay.hpp"
#include "oceval/report.hpp"
