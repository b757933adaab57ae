#pragma once

#include "zigzag/word.hpp"
#include "zigzag/upset.hpp"
#include "zigzag/automaton.hpp"
#include "zigzag/quantale.hpp"
#include "zigzag/digraph.hpp"
#include "zigzag/metric.hpp"
#include "zigzag/helly.hpp"
#include "zigzag/retract.hpp"
#include "zigzag/embedding.hpp"
#include "zigzag/absolute_retract.hpp"
#include "zigzag/gadgets.hpp"
#include "zigzag/hull.hpp"
#include "zigzag/consistency.hpp"
