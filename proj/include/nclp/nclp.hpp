#pragma once

#include "nclp/bijection.hpp"
#include "nclp/enumerate.hpp"
#include "nclp/error.hpp"
#include "nclp/freeness.hpp"
#include "nclp/json_io.hpp"
#include "nclp/partition.hpp"
#include "nclp/rational.hpp"
#include "nclp/render.hpp"
#include "nclp/series.hpp"
#include "nclp/transforms.hpp"
#include "nclp/tree.hpp"
#include "nclp/verify.hpp"
