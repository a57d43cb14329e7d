#pragma once

#include "rktrace/analysis.hpp"
#include "rktrace/bigint.hpp"
#include "rktrace/bitmat.hpp"
#include "rktrace/errors.hpp"
#include "rktrace/gf2m.hpp"
#include "rktrace/gray.hpp"
#include "rktrace/report.hpp"
#include "rktrace/ring.hpp"
#include "rktrace/sss.hpp"
#include "rktrace/trace_code.hpp"
