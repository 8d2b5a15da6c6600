#pragma once

#include "rkdist/canonical.hpp"
#include "rkdist/catalog.hpp"
#include "rkdist/core.hpp"
#include "rkdist/enumerate.hpp"
#include "rkdist/error.hpp"
#include "rkdist/io.hpp"
#include "rkdist/product.hpp"
