// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCKEDMAT_RATIONAL_HPP_
#define LOCKEDMAT_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lockedmat {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/4" and "2.125". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "7", "-3/4".
std::string to_string(const Rational& value);

}  // namespace lockedmat

#endif  // LOCKEDMAT_RATIONAL_HPP_
