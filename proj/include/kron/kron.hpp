#pragma once

#include "kron/partition.hpp"
#include "kron/expansion.hpp"
#include "kron/tableau.hpp"
#include "kron/skew.hpp"
#include "kron/oracle.hpp"
#include "kron/kronecker.hpp"
#include "kron/formulas.hpp"
#include "kron/verify.hpp"
