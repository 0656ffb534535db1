#pragma once

// Umbrella header.

#include "codebounds/bounds.hpp"
#include "codebounds/code.hpp"
#include "codebounds/code_io.hpp"
#include "codebounds/constructions.hpp"
#include "codebounds/gf2x.hpp"
#include "codebounds/search.hpp"
#include "codebounds/transforms.hpp"
