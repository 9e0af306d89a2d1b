#pragma once

#include <gmpxx.h>

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

}  // namespace aztec
