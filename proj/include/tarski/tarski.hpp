#ifndef TARSKI_TARSKI_HPP
#define TARSKI_TARSKI_HPP

// Umbrella header.

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/godel.hpp"
#include "tarski/io.hpp"
#include "tarski/metatheory.hpp"
#include "tarski/model.hpp"
#include "tarski/paradox.hpp"
#include "tarski/parse.hpp"
#include "tarski/prop.hpp"
#include "tarski/signature.hpp"

#endif  // TARSKI_TARSKI_HPP
