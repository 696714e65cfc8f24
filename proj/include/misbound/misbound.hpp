#pragma once

#include "bounds.hpp"
#include "canonical.hpp"
#include "dot.hpp"
#include "enumerate.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "miscount.hpp"
#include "verify.hpp"
#include "vertex_set.hpp"
