#pragma once
#include "cgs/exactring.hpp"
#include "cgs/quad/cartan_dieudonne.hpp"
#include "cgs/quad/pair.hpp"
#include "cgs/quad/quadform.hpp"
