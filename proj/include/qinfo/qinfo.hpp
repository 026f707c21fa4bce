// Umbrella header.

#pragma once

#include "qinfo/channel.hpp"
#include "qinfo/complex_matrix.hpp"
#include "qinfo/dephasing.hpp"
#include "qinfo/hermitian.hpp"
#include "qinfo/state.hpp"
#include "qinfo/sweep.hpp"
#include "qinfo/tensor.hpp"
#include "qinfo/verify.hpp"
