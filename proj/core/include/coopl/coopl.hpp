// Copyright 2026 The Coopl Authors
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
//
// Umbrella header: the whole public API.

#ifndef COOPL_COOPL_HPP_
#define COOPL_COOPL_HPP_

#include "coopl/coalition.hpp"
#include "coopl/distributions.hpp"
#include "coopl/errors.hpp"
#include "coopl/experiment.hpp"
#include "coopl/games.hpp"
#include "coopl/learners.hpp"
#include "coopl/lp.hpp"
#include "coopl/rational.hpp"
#include "coopl/reductions.hpp"
#include "coopl/rng.hpp"
#include "coopl/serialization.hpp"
#include "coopl/stabilizer.hpp"
#include "coopl/version.hpp"

#endif  // COOPL_COOPL_HPP_
