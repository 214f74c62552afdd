"""Compare enumerated class counts with the parity the rigidity verdict predicts."""
import logging
from typing import Optional

from rigiditylab.oracle.models import ParityReport, RealizationSet
from rigiditylab.rigidity.verdicts import GGRVerdict, Verdict, ggr_test

logger = logging.getLogger(__name__)


def parity_report(rs: RealizationSet, verdict: Optional[GGRVerdict] = None,
                  seed: Optional[int] = None) -> ParityReport:
    """
    A generically globally rigid graph has a single class. A locally rigid
    graph that is not, with v >= d + 2, has an even number of classes.
    Flexible and small graphs carry no prediction.
    """
    verdict = verdict or ggr_test(rs.graph, rs.d, "real", seed)
    notes = []
    if verdict.verdict is Verdict.GGF and rs.graph.v >= rs.d + 2:
        applies = True
        consistent = rs.classes % 2 == 0
    elif verdict.is_globally_rigid:
        applies = False
        consistent = rs.classes == 1
        notes.append("globally rigid: a single class is expected")
    else:
        applies = False
        consistent = True
        notes.append(f"no parity prediction for {verdict.verdict.value}")

    if not consistent:
        logger.warning("%d classes on %r contradict the %s verdict",
                       rs.classes, rs.graph, verdict.verdict.value)
    return ParityReport(
        classes=rs.classes,
        exactness=rs.exactness,
        verdict=verdict.verdict.value,
        theorem_applies=applies,
        consistent_with_theory=consistent,
        residual_max=rs.residual_max,
        notes=notes,
    )
