#pragma once

// Umbrella header: exact Schubert calculus on Grassmannians and their
// projective bundles, Grothendieck-Witt arithmetic, and the decision engine
// for quadratically enriched Euler classes.

#include "quadeuler/bundle.hpp"
#include "quadeuler/chern.hpp"
#include "quadeuler/cli.hpp"
#include "quadeuler/error.hpp"
#include "quadeuler/euler.hpp"
#include "quadeuler/graded.hpp"
#include "quadeuler/gw.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/json_io.hpp"
#include "quadeuler/parse.hpp"
#include "quadeuler/partition.hpp"
#include "quadeuler/pic.hpp"
#include "quadeuler/projbundle.hpp"
#include "quadeuler/schubert.hpp"
#include "quadeuler/space.hpp"
#include "quadeuler/sympoly.hpp"
