#pragma once

#include "ahlib/errors.hpp"
#include "ahlib/scalar.hpp"
#include "ahlib/poly.hpp"
#include "ahlib/linalg.hpp"
#include "ahlib/ahalg.hpp"
#include "ahlib/partitions.hpp"
#include "ahlib/repr.hpp"
#include "ahlib/analysis.hpp"
#include "ahlib/parse.hpp"
#include "ahlib/io.hpp"
