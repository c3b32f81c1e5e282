#pragma once

#include "permstego/alphabet.hpp"
#include "permstego/analysis.hpp"
#include "permstego/code_format.hpp"
#include "permstego/error.hpp"
#include "permstego/factoradic.hpp"
#include "permstego/natural.hpp"
#include "permstego/radix.hpp"
#include "permstego/random.hpp"
#include "permstego/stego.hpp"
#include "permstego/utf8.hpp"
