#pragma once

// Umbrella header: the full exact-quantization toolkit.
//
// Layering (each header includes everything below it):
//
//   errors, rational, generators      exact coefficients and the Lie bracket
//   context, monomial, report         twist parameters, PBW monomials, checks
//   poly, tensor                      normal-ordered series and tensor powers
//   factorial                         shifted-factorial calculus in h
//   twist                             the twist element, u/v, inverse laws
//   hopf                              quantized coproduct/antipode, axioms
//   sampler, parse, render            deterministic sampling and I/O
//   suites                            named verification suites for the CLI

#include "esvq/errors.hpp"
#include "esvq/factorial.hpp"
#include "esvq/generators.hpp"
#include "esvq/hopf.hpp"
#include "esvq/monomial.hpp"
#include "esvq/parse.hpp"
#include "esvq/poly.hpp"
#include "esvq/rational.hpp"
#include "esvq/render.hpp"
#include "esvq/report.hpp"
#include "esvq/sampler.hpp"
#include "esvq/suites.hpp"
#include "esvq/tensor.hpp"
#include "esvq/twist.hpp"

namespace esvq {

// Library version, bumped on any observable behavior change.
inline constexpr const char* kVersion = "1.0.0";

} // namespace esvq
