#pragma once

#include "dbr/hardy.hpp"
#include "dbr/matrix.hpp"
#include "dbr/dirichlet.hpp"
#include "dbr/debranges.hpp"
#include "dbr/operator_lab.hpp"
#include "dbr/moments.hpp"
#include "dbr/synthesis.hpp"
#include "dbr/io.hpp"
