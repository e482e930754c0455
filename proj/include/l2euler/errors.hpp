/* Error taxonomy shared by the library and the CLI.
 *
 * Errors are thrown as typed exceptions and mapped to distinct process
 * exit codes at the CLI boundary:
 *   InputError     -> 2 (bad input, parse failure, unsupported quotient shape)
 *   NonAcyclicError-> 1 (the covering is not L2-acyclic; no invariant defined)
 *   SizeGuardError -> 3 (coefficient growth exceeded the configured limit)
 */
#ifndef L2EULER_ERRORS_HPP
#define L2EULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l2euler {

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class NonAcyclicError : public std::runtime_error {
public:
    explicit NonAcyclicError(const std::string& what) : std::runtime_error(what) {}
};

class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l2euler

#endif
