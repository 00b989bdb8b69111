import logging

from pydantic import BaseModel, ConfigDict

from hda.automaton import validate
from hda.determinism import is_deterministic
from hda.search import enumerate_language, essential_report
from ipomsets.steps import sparse_decomposition
from languages.language import LanguageSet
from languages.quotients import is_swap_invariant
from mn.construction import MnAutomaton

logger = logging.getLogger(__name__)


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    bound: int
    missing: tuple[str, ...] = ()      # members of L not accepted
    extra: tuple[str, ...] = ()        # accepted ipomsets outside L
    essential_mismatch: tuple[str, ...] = ()
    problems: tuple[str, ...] = ()     # validation problems

    @property
    def language_ok(self) -> bool:
        return not self.missing and not self.extra

    @property
    def essential_ok(self) -> bool:
        return not self.essential_mismatch

    @property
    def valid(self) -> bool:
        return not self.problems

    @property
    def passed(self) -> bool:
        return self.language_ok and self.essential_ok and self.valid


def verification_bound(L: LanguageSet) -> int:
    return max((len(sparse_decomposition(P).steps) for P in L.members), default=0) + 2


def verify_mn(L: LanguageSet, M: MnAutomaton, bound: int | None = None) -> VerifyReport:
    """Check Lang(M) = L, that the essential cells are exactly the classes
    with a nonempty quotient, and that M is a valid HDA."""
    bound = verification_bound(L) if bound is None else bound
    report = validate(M.hda)
    if not report.valid:
        return VerifyReport(bound=bound, problems=report.problems)

    accepted = enumerate_language(M.hda, bound)
    essential = essential_report(M.hda).essential
    expected = {cell.id for cell in M.cells if cell.essential}
    result = VerifyReport(
        bound=bound,
        missing=tuple(str(P) for P in sorted(L.members - accepted)),
        extra=tuple(str(P) for P in sorted(accepted - L.members)),
        essential_mismatch=tuple(sorted(essential ^ expected)),
    )
    logger.info("verify_mn: passed=%s (bound %d)", result.passed, bound)
    return result


class DeterminismAgreement(BaseModel):
    model_config = ConfigDict(frozen=True)

    swap_invariant: bool
    deterministic: bool

    @property
    def agrees(self) -> bool:
        return self.swap_invariant == self.deterministic


def determinism_agreement(L: LanguageSet, M: MnAutomaton) -> DeterminismAgreement:
    """A language is deterministic iff it is swap-invariant, and MN(L)
    is deterministic exactly then."""
    return DeterminismAgreement(
        swap_invariant=is_swap_invariant(L).holds,
        deterministic=is_deterministic(M.hda).holds,
    )
