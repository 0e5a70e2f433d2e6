#pragma once

#include "gentle/algebra.hpp"
#include "gentle/braid.hpp"
#include "gentle/checks.hpp"
#include "gentle/complex.hpp"
#include "gentle/dsl.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/functors.hpp"
#include "gentle/invertible.hpp"
#include "gentle/json_io.hpp"
#include "gentle/linalg.hpp"
#include "gentle/rational.hpp"
#include "gentle/rep.hpp"
