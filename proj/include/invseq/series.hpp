#pragma once

#include "invseq/series/truncated_series.hpp"
#include "invseq/series/quadratic_field.hpp"
#include "invseq/series/polynomial.hpp"
#include "invseq/series/kernel.hpp"
#include "invseq/series/closed_forms.hpp"
#include "invseq/series/minimal_polynomials.hpp"
#include "invseq/series/catalytic.hpp"
