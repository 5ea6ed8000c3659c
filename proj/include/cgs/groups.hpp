#pragma once
#include "cgs/groups/enumerate.hpp"
#include "cgs/groups/groups.hpp"
