#pragma once

#include "radcube/field.hpp"
#include "radcube/kmatrix.hpp"
#include "radcube/ring.hpp"
#include "radcube/module.hpp"
#include "radcube/complex.hpp"
#include "radcube/series.hpp"
#include "radcube/theorems.hpp"
#include "radcube/recursion.hpp"
#include "radcube/parse.hpp"
#include "radcube/catalog.hpp"
#include "radcube/report.hpp"
#include "radcube/acceptance.hpp"
