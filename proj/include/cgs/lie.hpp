#pragma once
#include "cgs/lie/lie.hpp"
