#pragma once

#include "neartsp/alg_p.hpp"
#include "neartsp/alg_q.hpp"
#include "neartsp/bench.hpp"
#include "neartsp/chains.hpp"
#include "neartsp/error.hpp"
#include "neartsp/euler.hpp"
#include "neartsp/exact.hpp"
#include "neartsp/generator.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/instance_io.hpp"
#include "neartsp/matching.hpp"
#include "neartsp/metric.hpp"
#include "neartsp/report.hpp"
#include "neartsp/solve.hpp"
#include "neartsp/solve_report.hpp"
#include "neartsp/spanning.hpp"
#include "neartsp/structures.hpp"
