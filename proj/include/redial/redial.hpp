// redial/redial.hpp
//
// Copyright 2024  Redial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.
//
// Umbrella header for the whole library (the command-line front end and the
// test fixtures stay separate; include redial/cli.hpp or redial/testkit.hpp
// for those).

#ifndef REDIAL_REDIAL_HPP_
#define REDIAL_REDIAL_HPP_

#include "redial/audio.hpp"
#include "redial/csv.hpp"
#include "redial/eaf.hpp"
#include "redial/errors.hpp"
#include "redial/io.hpp"
#include "redial/lang.hpp"
#include "redial/model.hpp"
#include "redial/pairing.hpp"
#include "redial/release.hpp"
#include "redial/validate.hpp"
#include "redial/xml.hpp"

#endif  // REDIAL_REDIAL_HPP_
