#pragma once

#include <stdexcept>
#include <string>

namespace smckit {

/// Malformed input: bad workspace, inconsistent dimensions, invalid relation.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource bound was exceeded (projective dimension, path
/// count, strip iterations). Usually means infinite global dimension or an
/// object outside the expected subcategory.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed, e.g. mutation at a non-rigid object.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace smckit
