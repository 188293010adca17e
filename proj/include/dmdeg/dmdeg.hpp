#pragma once

// Multidegrees of bifiltered D-modules: everything in one include.

#include "dmdeg/ring.hpp"
#include "dmdeg/order.hpp"
#include "dmdeg/free_element.hpp"
#include "dmdeg/groebner.hpp"
#include "dmdeg/resolution.hpp"
#include "dmdeg/dimension.hpp"
#include "dmdeg/kpoly.hpp"
#include "dmdeg/integer_matrix.hpp"
#include "dmdeg/hull.hpp"
#include "dmdeg/pipeline.hpp"
#include "dmdeg/gkz.hpp"
#include "dmdeg/parser.hpp"
#include "dmdeg/report.hpp"
