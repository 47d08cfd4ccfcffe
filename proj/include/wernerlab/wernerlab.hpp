// Copyright 2026 The wernerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "wernerlab/analytic.hpp"
#include "wernerlab/density.hpp"
#include "wernerlab/discrimination.hpp"
#include "wernerlab/eigen.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/io.hpp"
#include "wernerlab/matrix.hpp"
#include "wernerlab/metrics.hpp"
#include "wernerlab/metrology.hpp"
#include "wernerlab/parallel.hpp"
#include "wernerlab/random.hpp"
#include "wernerlab/telesim.hpp"
#include "wernerlab/werner.hpp"
