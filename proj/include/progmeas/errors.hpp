// Copyright 2026 The progmeas Authors
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

#include <stdexcept>

namespace progmeas {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its documented domain.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A normalization denominator (shoulder sum) is zero.
class InvalidNormalization : public Error {
   public:
    using Error::Error;
};

/// An estimator was asked for a ratio with no conclusive events.
class NoData : public Error {
   public:
    using Error::Error;
};

/// A counts file is missing a required column or holds a malformed value.
class SchemaError : public Error {
   public:
    using Error::Error;
};

/// Requested feature exists in the theory but not in this implementation.
class UnsupportedFeature : public Error {
   public:
    using Error::Error;
};

}  // namespace progmeas
