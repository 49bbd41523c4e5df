#pragma once

#include "radix/dual.hpp"
#include "radix/error.hpp"
#include "radix/exact_linalg.hpp"
#include "radix/matrix.hpp"
#include "radix/scalar.hpp"
#include "radix/space.hpp"
#include "radix/tensor.hpp"
