#pragma once

#include "udcodes/core.hpp"
#include "udcodes/decipher.hpp"
#include "udcodes/error.hpp"
#include "udcodes/kraft.hpp"
#include "udcodes/power.hpp"
#include "udcodes/props.hpp"
#include "udcodes/refine.hpp"
