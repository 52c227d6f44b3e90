#include "biharm/errors.hpp"

#include <exception>

namespace biharm {

namespace {

// what() already starts with "Name: "; keep it and put the context in front.
template <class E>
bool rethrow_as(const Error& e, const std::string& context) {
    if (dynamic_cast<const E*>(&e) == nullptr) return false;
    std::string msg = e.what();
    const auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw E(context + ": " + msg);
}

} // namespace

void rethrow_with_context(const std::string& context) {
    try {
        throw;
    } catch (const Error& e) {
        rethrow_as<DomainError>(e, context) || rethrow_as<SymmetryViolation>(e, context) ||
            rethrow_as<NonLatticeShift>(e, context) || rethrow_as<BadQuadrature>(e, context) ||
            rethrow_as<InsufficientRange>(e, context) || rethrow_as<SingularAtZero>(e, context) ||
            rethrow_as<NonZeroMean>(e, context) || rethrow_as<QuadratureDivergence>(e, context) ||
            rethrow_as<SpectrumOverflow>(e, context) || rethrow_as<ConfigError>(e, context);
        throw Error(context + ": " + e.what());
    }
}

} // namespace biharm
