/// Umbrella header for the lamlat library.
#pragma once

#include "lamlat/bigint.hpp"
#include "lamlat/corpus.hpp"
#include "lamlat/covering.hpp"
#include "lamlat/criteria.hpp"
#include "lamlat/errors.hpp"
#include "lamlat/herm_form.hpp"
#include "lamlat/json_io.hpp"
#include "lamlat/laurent.hpp"
#include "lamlat/zlattice.hpp"
