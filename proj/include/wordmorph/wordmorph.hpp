#pragma once

#include "wordmorph/catalog.hpp"
#include "wordmorph/error.hpp"
#include "wordmorph/fixedpoint.hpp"
#include "wordmorph/morphism.hpp"
#include "wordmorph/nonuniformize.hpp"
#include "wordmorph/periodicity.hpp"
#include "wordmorph/specfile.hpp"
#include "wordmorph/verify.hpp"
#include "wordmorph/words.hpp"
