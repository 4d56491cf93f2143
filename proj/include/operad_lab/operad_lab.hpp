/*
 *   Copyright 2026 The operad_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPERAD_LAB_OPERAD_LAB_HPP
#define OPERAD_LAB_OPERAD_LAB_HPP

#include "operad_lab/errors.hpp"
#include "operad_lab/scalar.hpp"
#include "operad_lab/sparse_matrix.hpp"
#include "operad_lab/element.hpp"
#include "operad_lab/operad.hpp"
#include "operad_lab/assoc.hpp"
#include "operad_lab/shift.hpp"
#include "operad_lab/endo.hpp"
#include "operad_lab/parallel.hpp"
#include "operad_lab/cohomology.hpp"
#include "operad_lab/io.hpp"
#include "operad_lab/random.hpp"
#include "operad_lab/verify.hpp"

#endif  // OPERAD_LAB_OPERAD_LAB_HPP
