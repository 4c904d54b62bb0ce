#pragma once

// Deformed-algebra coherent states: truncated lowest-weight representations
// of su(1,1), quadratic, Higgs, and q-deformed algebras, canonical conjugate
// ladder operators, maps to undeformed Lie algebras, and the three
// coherent-state families built on top of them.

#include "dacs/algebra.hpp"
#include "dacs/coherent.hpp"
#include "dacs/conjugate.hpp"
#include "dacs/errors.hpp"
#include "dacs/expm.hpp"
#include "dacs/io.hpp"
#include "dacs/matrix.hpp"
#include "dacs/report.hpp"
#include "dacs/representation.hpp"
#include "dacs/verify.hpp"
