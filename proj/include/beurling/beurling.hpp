#pragma once

#include "beurling/algebra.hpp"
#include "beurling/cancellation.hpp"
#include "beurling/errors.hpp"
#include "beurling/finite_group.hpp"
#include "beurling/free_word.hpp"
#include "beurling/grigorchuk.hpp"
#include "beurling/group_hom.hpp"
#include "beurling/io.hpp"
#include "beurling/lift.hpp"
#include "beurling/linalg.hpp"
#include "beurling/permutation.hpp"
#include "beurling/rational.hpp"
#include "beurling/separation.hpp"
#include "beurling/subgroup.hpp"
#include "beurling/telescope.hpp"
#include "beurling/weight.hpp"
#include "beurling/y_graph.hpp"
