#pragma once

#include "braid/bench.hpp"
#include "braid/burau.hpp"
#include "braid/cli.hpp"
#include "braid/density.hpp"
#include "braid/garside.hpp"
#include "braid/laurent.hpp"
#include "braid/order.hpp"
#include "braid/strands.hpp"
#include "braid/subgroups.hpp"
#include "braid/verification.hpp"
#include "braid/word.hpp"
