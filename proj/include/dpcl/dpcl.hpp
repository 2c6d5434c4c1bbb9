/*
 * Copyright 2026 The dpcl Authors
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
#pragma once

#include "integer.hpp"
#include "poly.hpp"
#include "linalg.hpp"
#include "resultant.hpp"
#include "number_field.hpp"
#include "modp.hpp"
#include "triform.hpp"
#include "newton.hpp"
#include "roots.hpp"
#include "delpezzo.hpp"
#include "branchcurve.hpp"
#include "twotorsion.hpp"
#include "localbounds.hpp"
#include "family.hpp"
#include "oracle.hpp"
#include "mu3.hpp"
#include "parse.hpp"
#include "pipeline.hpp"
#include "report.hpp"
