#pragma once

#include "unimap/analyze.hpp"
#include "unimap/bijection.hpp"
#include "unimap/count.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/errors.hpp"
#include "unimap/glued_map.hpp"
#include "unimap/ints.hpp"
#include "unimap/multigraph.hpp"
#include "unimap/otree.hpp"
#include "unimap/parallel.hpp"
#include "unimap/partition.hpp"
#include "unimap/permutation.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/poly.hpp"
#include "unimap/remy.hpp"
#include "unimap/serialize.hpp"
#include "unimap/series.hpp"
#include "unimap/sign.hpp"
#include "unimap/verdict.hpp"
#include "unimap/verify.hpp"
