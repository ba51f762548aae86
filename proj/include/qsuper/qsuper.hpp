#pragma once

#include "errors.hpp"
#include "laurent.hpp"
#include "shape.hpp"
#include "element.hpp"
#include "memo.hpp"
#include "superalgebra.hpp"
#include "minors.hpp"
#include "linalg.hpp"
#include "localization.hpp"
#include "order.hpp"
#include "lusztig.hpp"
#include "canonical_basis.hpp"
#include "actions.hpp"
#include "invariants.hpp"
#include "kashiwara.hpp"
#include "io.hpp"
#include "verify.hpp"
