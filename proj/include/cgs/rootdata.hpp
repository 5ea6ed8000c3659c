#pragma once
#include "cgs/roots/build.hpp"
#include "cgs/roots/fixture.hpp"
