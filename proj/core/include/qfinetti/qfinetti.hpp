#pragma once

#include "qfinetti/bounds.hpp"
#include "qfinetti/definetti.hpp"
#include "qfinetti/measures.hpp"
#include "qfinetti/parallel.hpp"
#include "qfinetti/projection.hpp"
#include "qfinetti/qcore.hpp"
#include "qfinetti/scalar.hpp"
#include "qfinetti/serialization.hpp"
#include "qfinetti/verify_suite.hpp"
