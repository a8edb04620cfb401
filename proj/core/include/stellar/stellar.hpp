#pragma once

#include "stellar/alignment.hpp"
#include "stellar/analysis.hpp"
#include "stellar/arrangements.hpp"
#include "stellar/binomial.hpp"
#include "stellar/bloch_point.hpp"
#include "stellar/dicke_vector.hpp"
#include "stellar/entanglement.hpp"
#include "stellar/errors.hpp"
#include "stellar/families.hpp"
#include "stellar/io.hpp"
#include "stellar/majorana_set.hpp"
#include "stellar/maximal_states.hpp"
#include "stellar/polynomial.hpp"
#include "stellar/symmetric_state.hpp"
