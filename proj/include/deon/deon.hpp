#pragma once

#include "deon/diagnose.hpp"
#include "deon/dot.hpp"
#include "deon/entail.hpp"
#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/normfile.hpp"
#include "deon/state.hpp"
#include "deon/update.hpp"
#include "deon/worlds.hpp"
