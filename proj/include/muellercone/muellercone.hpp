// SPDX-License-Identifier: Apache-2.0
//
// mueller-cone: cone-side numerics for Stokes vectors and Mueller matrices
// Copyright (C) 2026 the mueller-cone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MUELLERCONE_MUELLERCONE_HPP
#define MUELLERCONE_MUELLERCONE_HPP

#include "muellercone/approx.hpp"
#include "muellercone/conespec.hpp"
#include "muellercone/ecm.hpp"
#include "muellercone/fixtures.hpp"
#include "muellercone/matrix_io.hpp"
#include "muellercone/mueller.hpp"
#include "muellercone/numkernel.hpp"
#include "muellercone/report_json.hpp"
#include "muellercone/stokes.hpp"

#endif  // MUELLERCONE_MUELLERCONE_HPP
