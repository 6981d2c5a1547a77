#pragma once

#include "tropref/asymptotics.hpp"
#include "tropref/diagram.hpp"
#include "tropref/enumerate.hpp"
#include "tropref/integer.hpp"
#include "tropref/invariants.hpp"
#include "tropref/io.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"
#include "tropref/words.hpp"
