// Umbrella include.
#pragma once

#include "sieveforge/generators.hpp"
#include "sieveforge/graph.hpp"
#include "sieveforge/graph6.hpp"
#include "sieveforge/harness.hpp"
#include "sieveforge/matrix.hpp"
#include "sieveforge/matrix_io.hpp"
#include "sieveforge/modg.hpp"
#include "sieveforge/parallel.hpp"
#include "sieveforge/permutation.hpp"
#include "sieveforge/random.hpp"
#include "sieveforge/scalars.hpp"
#include "sieveforge/selftest.hpp"
#include "sieveforge/sieve.hpp"
#include "sieveforge/snn.hpp"
#include "sieveforge/sparse.hpp"
#include "sieveforge/stats.hpp"
#include "sieveforge/transform.hpp"
#include "sieveforge/wl.hpp"
