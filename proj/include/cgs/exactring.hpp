#pragma once
#include "cgs/errors.hpp"
#include "cgs/linalg/linalg.hpp"
#include "cgs/linalg/matrix.hpp"
#include "cgs/linalg/snf.hpp"
#include "cgs/ring/concepts.hpp"
#include "cgs/ring/dual.hpp"
#include "cgs/ring/integer.hpp"
#include "cgs/ring/laurent.hpp"
#include "cgs/ring/rational.hpp"
#include "cgs/ring/squares.hpp"
#include "cgs/ring/tangent.hpp"
#include "cgs/ring/zmod.hpp"
