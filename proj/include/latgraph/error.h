// include/latgraph/error.h

// Copyright 2026  The latgraph authors

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

#ifndef LATGRAPH_ERROR_H_
#define LATGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace latgraph {

// Base class for every recoverable error raised by the library.  The CLI maps
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LATGRAPH_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

LATGRAPH_DEFINE_ERROR(InvalidArcError);
LATGRAPH_DEFINE_ERROR(EmptyLabelsError);
LATGRAPH_DEFINE_ERROR(LabelOutOfRangeError);
LATGRAPH_DEFINE_ERROR(AlphabetMismatchError);
LATGRAPH_DEFINE_ERROR(NoValidPathError);
LATGRAPH_DEFINE_ERROR(NoValidAlignmentError);
LATGRAPH_DEFINE_ERROR(EmptyLatticeError);
LATGRAPH_DEFINE_ERROR(MissingFrameInfoError);
LATGRAPH_DEFINE_ERROR(MissingEmitInfoError);
LATGRAPH_DEFINE_ERROR(BadShapeError);
LATGRAPH_DEFINE_ERROR(AllNegInfRowError);
LATGRAPH_DEFINE_ERROR(InstanceTooLargeError);
LATGRAPH_DEFINE_ERROR(InvalidVocabSizeError);
LATGRAPH_DEFINE_ERROR(ParseError);

#undef LATGRAPH_DEFINE_ERROR

}  // namespace latgraph

#endif  // LATGRAPH_ERROR_H_
