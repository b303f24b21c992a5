// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header: exact cyclotomic arithmetic, certified signs, signature
// functions, the so(2r+1) modular data, metric groups and the Witt-word
// calculus with its verification suites.

#pragma once

#include "wittcharge/errors.hpp"
#include "wittcharge/number_theory.hpp"
#include "wittcharge/cyclotomic.hpp"
#include "wittcharge/interval.hpp"
#include "wittcharge/algebraic.hpp"
#include "wittcharge/signatures.hpp"
#include "wittcharge/so_odd.hpp"
#include "wittcharge/metric_group.hpp"
#include "wittcharge/witt.hpp"
#include "wittcharge/json_io.hpp"
#include "wittcharge/verify.hpp"
