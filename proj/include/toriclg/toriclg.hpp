#pragma once

#include "toriclg/error.hpp"
#include "toriclg/numeric.hpp"
#include "toriclg/matrix.hpp"
#include "toriclg/lp.hpp"
#include "toriclg/report.hpp"
#include "toriclg/lattice.hpp"
#include "toriclg/quotsing.hpp"
#include "toriclg/contractions.hpp"
#include "toriclg/laurent.hpp"
#include "toriclg/iseries.hpp"
#include "toriclg/verify.hpp"
