// Umbrella header.
#ifndef AMRPLUS_AMRPLUS_HPP
#define AMRPLUS_AMRPLUS_HPP

#include "amrplus/ast.hpp"
#include "amrplus/contexts.hpp"
#include "amrplus/drs.hpp"
#include "amrplus/lexmap.hpp"
#include "amrplus/logic.hpp"
#include "amrplus/penman.hpp"
#include "amrplus/render.hpp"
#include "amrplus/triples.hpp"
#include "amrplus/upgrade.hpp"

#endif  // AMRPLUS_AMRPLUS_HPP
