/*
   Copyright 2026 The polygauss authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYGAUSS_POLYGAUSS_HPP
#define POLYGAUSS_POLYGAUSS_HPP

#include "polygauss/characters.hpp"
#include "polygauss/cyclotomic.hpp"
#include "polygauss/finite_field.hpp"
#include "polygauss/gauss_sums.hpp"
#include "polygauss/poly.hpp"
#include "polygauss/verify.hpp"

#endif  // POLYGAUSS_POLYGAUSS_HPP
