#ifndef WAVELAB_ERRORS_HPP
#define WAVELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavelab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define WAVELAB_ERROR_TYPE(Name)      \
  struct Name : Error {               \
    using Error::Error;               \
  };

// Grid / state construction
WAVELAB_ERROR_TYPE(NonPowerOfTwo)
WAVELAB_ERROR_TYPE(DegenerateInterval)
WAVELAB_ERROR_TYPE(NonPositiveWidth)
WAVELAB_ERROR_TYPE(ModeOutOfRange)
WAVELAB_ERROR_TYPE(ZeroFunction)
WAVELAB_ERROR_TYPE(GridMismatch)
WAVELAB_ERROR_TYPE(Only1D)

// Dispersion gate
WAVELAB_ERROR_TYPE(ZeroWavenumber)
WAVELAB_ERROR_TYPE(InsufficientSamples)

// Potentials / evolution
WAVELAB_ERROR_TYPE(BadPotentialSpec)
WAVELAB_ERROR_TYPE(KindRequires2D)
WAVELAB_ERROR_TYPE(SnapshotScheduleInvalid)
WAVELAB_ERROR_TYPE(ScreenNotReached)

// Observables
WAVELAB_ERROR_TYPE(IntervalOutOfGrid)
WAVELAB_ERROR_TYPE(ReversedInterval)
WAVELAB_ERROR_TYPE(CommensurabilityError)
WAVELAB_ERROR_TYPE(ZeroMomentum)
WAVELAB_ERROR_TYPE(NonPositiveWavelength)

// Old-quantum calculations
WAVELAB_ERROR_TYPE(NonPositiveFrequency)
WAVELAB_ERROR_TYPE(NonPositiveRadius)
WAVELAB_ERROR_TYPE(NonPositiveQuantumNumber)
WAVELAB_ERROR_TYPE(NaturalUnitsUnsupported)
WAVELAB_ERROR_TYPE(BadQuantumNumbers)
WAVELAB_ERROR_TYPE(NonPositiveWorkFunction)

// Configuration / serialization
WAVELAB_ERROR_TYPE(ConfigError)
WAVELAB_ERROR_TYPE(IoError)

#undef WAVELAB_ERROR_TYPE

}  // namespace wavelab

#endif  // WAVELAB_ERRORS_HPP
