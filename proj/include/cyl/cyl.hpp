#pragma once

// Umbrella header for the cylkit library: terms and axioms of the
// n-dimensional cylindric-type signature, compact normal forms, finite atom
// structures with their complex algebras, witness-based satisfiability
// decision, term rewriting, the non-atomicity splitter, and the brute-force
// oracle.

#include "cyl/params.hpp"
#include "cyl/term.hpp"
#include "cyl/axioms.hpp"
#include "cyl/normal_form.hpp"
#include "cyl/structure.hpp"
#include "cyl/conditions.hpp"
#include "cyl/complex_algebra.hpp"
#include "cyl/point_form.hpp"
#include "cyl/tuples.hpp"
#include "cyl/witness.hpp"
#include "cyl/rewriter.hpp"
#include "cyl/splitter.hpp"
#include "cyl/oracle.hpp"
#include "cyl/io.hpp"
