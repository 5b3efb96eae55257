#pragma once

// Umbrella header: exact gradings of low-rank matrix Lie algebras.

#include "gradekit/autos.hpp"
#include "gradekit/catalog.hpp"
#include "gradekit/cyclotomic.hpp"
#include "gradekit/error.hpp"
#include "gradekit/gradings.hpp"
#include "gradekit/io.hpp"
#include "gradekit/liealg.hpp"
#include "gradekit/matrix.hpp"
#include "gradekit/rational.hpp"
#include "gradekit/realforms.hpp"
#include "gradekit/smith.hpp"
#include "gradekit/subspace.hpp"
