#pragma once

#include "triplepoint/branch.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/graph.hpp"
#include "triplepoint/obstruct.hpp"
#include "triplepoint/qnum.hpp"
