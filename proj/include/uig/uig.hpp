#ifndef UIG_UIG_HPP
#define UIG_UIG_HPP

#include "uig/arc_model.hpp"
#include "uig/chordal.hpp"
#include "uig/fpt.hpp"
#include "uig/graph.hpp"
#include "uig/holes.hpp"
#include "uig/io.hpp"
#include "uig/phcag_solvers.hpp"
#include "uig/proper_interval.hpp"
#include "uig/recognition.hpp"
#include "uig/witness.hpp"

#endif  // UIG_UIG_HPP
