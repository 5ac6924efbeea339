"""Exception hierarchy.

Every error carries a module-qualified ``code`` so the CLI can surface it
verbatim and pick an exit status.
"""


class HypersymError(Exception):
    code = "hypersym.error"


class ValidationError(HypersymError, ValueError):
    code = "hypermodel.invalid"


class DisjointnessViolation(ValidationError):
    code = "hypermodel.disjointness"


class UnknownVertex(ValidationError, KeyError):
    code = "hypermodel.unknown_vertex"

    def __str__(self):
        return Exception.__str__(self)


class DuplicateHyperedge(ValidationError):
    code = "hypermodel.duplicate_hyperedge"


class EmptyHyperedge(ValidationError):
    code = "hypermodel.empty_hyperedge"


class DuplicateLabel(ValidationError):
    code = "hypermodel.duplicate_label"


class HypergraphInvalid(ValidationError):
    """Aggregate of every violation found in one candidate description."""

    code = "hypermodel.invalid"

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{len(self.violations)} violation(s): {lines}")


class ReactionSyntaxError(ValidationError):
    code = "reactions.syntax"

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateSpeciesOnSide(ValidationError):
    code = "reactions.duplicate_species"


class DegreeZeroVertex(ValidationError):
    code = "matrices.degree_zero"


class NotSymmetric(HypersymError, ValueError):
    code = "spectra.not_symmetric"


class NoConvergence(HypersymError, ArithmeticError):
    code = "spectra.no_convergence"


class SearchCapExceeded(HypersymError):
    code = "symmetry.search_cap"


class PartitionInvalid(ValidationError):
    code = "quotient.partition_invalid"


class NotOrbitPartition(HypersymError, ValueError):
    code = "quotient.not_orbit_partition"


class ToleranceFailure(HypersymError, ArithmeticError):
    code = "quotient.tolerance"


class InvalidParams(ValidationError):
    code = "corpus.invalid_params"


class GenerationFailed(HypersymError):
    code = "corpus.generation_failed"
