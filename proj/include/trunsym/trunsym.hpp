#pragma once

#include "trunsym/field.hpp"
#include "trunsym/matrix.hpp"
#include "trunsym/orbit.hpp"
#include "trunsym/partition.hpp"
#include "trunsym/poly_ring.hpp"
#include "trunsym/series.hpp"
#include "trunsym/truncated_ideal.hpp"
#include "trunsym/verify.hpp"
