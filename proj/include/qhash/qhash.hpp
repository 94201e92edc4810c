#pragma once

#include "qhash/bias.hpp"
#include "qhash/fingerprint.hpp"
#include "qhash/hash.hpp"
#include "qhash/keyset.hpp"
#include "qhash/random.hpp"
#include "qhash/search.hpp"
#include "qhash/signature.hpp"
#include "qhash/state.hpp"
