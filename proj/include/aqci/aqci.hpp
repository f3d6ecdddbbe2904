#ifndef AQCI_AQCI_HPP
#define AQCI_AQCI_HPP

#include "aqci/rational.hpp"
#include "aqci/datum.hpp"
#include "aqci/monomial_ideal.hpp"
#include "aqci/canonical.hpp"
#include "aqci/serialize.hpp"
#include "aqci/simplex.hpp"
#include "aqci/lct.hpp"
#include "aqci/invariants.hpp"
#include "aqci/multiplicity.hpp"
#include "aqci/enumerate.hpp"
#include "aqci/verify.hpp"

#endif  // AQCI_AQCI_HPP
