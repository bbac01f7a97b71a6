#ifndef MOG_MOG_HPP
#define MOG_MOG_HPP

#include "mog/analysis.hpp"
#include "mog/approx.hpp"
#include "mog/cone.hpp"
#include "mog/equilibria.hpp"
#include "mog/errors.hpp"
#include "mog/game.hpp"
#include "mog/generators.hpp"
#include "mog/io.hpp"
#include "mog/mocr.hpp"
#include "mog/outcome.hpp"
#include "mog/pareto.hpp"
#include "mog/rational.hpp"

#endif // MOG_MOG_HPP
