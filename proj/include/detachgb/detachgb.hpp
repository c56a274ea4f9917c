#pragma once

#include "detachgb/coefficient.hpp"
#include "detachgb/conversions.hpp"
#include "detachgb/detach.hpp"
#include "detachgb/format.hpp"
#include "detachgb/labeled.hpp"
#include "detachgb/module.hpp"
#include "detachgb/monomial.hpp"
#include "detachgb/oracle.hpp"
#include "detachgb/parse.hpp"
#include "detachgb/polynomial.hpp"
#include "detachgb/reduction.hpp"
#include "detachgb/sig_engine.hpp"
#include "detachgb/system_file.hpp"
