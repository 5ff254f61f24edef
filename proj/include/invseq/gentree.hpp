#pragma once

#include "invseq/gentree/class_id.hpp"
#include "invseq/gentree/count.hpp"
#include "invseq/gentree/dense.hpp"
#include "invseq/gentree/label.hpp"
#include "invseq/gentree/rules.hpp"
#include "invseq/gentree/succession_rule.hpp"
