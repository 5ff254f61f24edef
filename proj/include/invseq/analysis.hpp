#pragma once

#include "invseq/analysis/classify.hpp"
#include "invseq/analysis/growth.hpp"
#include "invseq/analysis/targets.hpp"
