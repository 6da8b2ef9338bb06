#pragma once

#include "count.hpp"
#include "golden.hpp"
#include "heterogeneous.hpp"
#include "homogeneous.hpp"
#include "oracle.hpp"
#include "polygonal.hpp"
#include "regula_virginum.hpp"
#include "series.hpp"
