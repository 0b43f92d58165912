#pragma once

// Umbrella header.

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"
#include "zsum/bitset.hpp"
#include "zsum/profile.hpp"
#include "zsum/oracle.hpp"
#include "zsum/search.hpp"
#include "zsum/lemmas.hpp"
#include "zsum/suites.hpp"
#include "zsum/text.hpp"
#include "zsum/verify.hpp"
