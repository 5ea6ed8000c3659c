#pragma once
#include "cgs/cliff/clifford.hpp"
#include "cgs/cliff/structure.hpp"
