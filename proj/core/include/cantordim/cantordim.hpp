#pragma once

#include "cantordim/cover.hpp"
#include "cantordim/covers.hpp"
#include "cantordim/errors.hpp"
#include "cantordim/explorer.hpp"
#include "cantordim/hfun.hpp"
#include "cantordim/ideals.hpp"
#include "cantordim/index_spec.hpp"
#include "cantordim/measures.hpp"
#include "cantordim/numeric.hpp"
#include "cantordim/tree_ops.hpp"
#include "cantordim/tree_set.hpp"
#include "cantordim/word.hpp"
