#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "rational.hpp"
#include "complex.hpp"
#include "recognition.hpp"
#include "duality.hpp"
#include "coloring.hpp"
#include "surgery.hpp"
#include "geodesy.hpp"
#include "random.hpp"
#include "generators.hpp"
#include "io.hpp"
