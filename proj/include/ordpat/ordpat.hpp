#pragma once

#include "ordpat/dot.hpp"
#include "ordpat/enumerate.hpp"
#include "ordpat/errors.hpp"
#include "ordpat/json_io.hpp"
#include "ordpat/pattern.hpp"
#include "ordpat/poset.hpp"
#include "ordpat/report.hpp"
#include "ordpat/set_system.hpp"
#include "ordpat/sigma.hpp"
#include "ordpat/witness.hpp"
