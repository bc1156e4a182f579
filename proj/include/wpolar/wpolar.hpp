#pragma once

#include "canonical.hpp"
#include "census.hpp"
#include "enumerate.hpp"
#include "extremal.hpp"
#include "io.hpp"
#include "report_io.hpp"
#include "transforms.hpp"
#include "tree.hpp"
#include "verify.hpp"
