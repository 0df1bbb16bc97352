"""Interaction information and the discord monogamy deficit for three parties.

Sign convention: delta_m = D(node:X) + D(node:Y) - D(node:XY), so
delta_m <= 0 means discord is monogamous for that state and node.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .config import OptimizerConfig
from .discord import discord, min_conditional_entropy, _reduce_for
from .entropy import unmeasured_conditional_entropy, vn_entropy
from .errors import InvalidSubsystemError
from .linalg import DensityMatrix, partial_trace

MONOGAMY_TOL = 1e-6
DEAD_BAND = 1e-5

_NODE_NAMES = {"A": 0, "B": 1, "C": 2}


def node_index(node) -> int:
    if isinstance(node, str):
        try:
            return _NODE_NAMES[node.upper()]
        except KeyError:
            raise InvalidSubsystemError(f"node must be one of A, B, C, got {node!r}")
    node = int(node)
    if node not in (0, 1, 2):
        raise InvalidSubsystemError(f"node index must be 0, 1 or 2, got {node}")
    return node


def _require_three_parties(rho: DensityMatrix):
    if rho.n_subsystems != 3:
        raise InvalidSubsystemError(
            f"expected a 3-party state, got {rho.n_subsystems} subsystems"
        )


@dataclass(frozen=True)
class MonogamyReport:
    """The three discords, the deficit, and both interaction informations."""

    node: str
    d_ab: float
    d_ac: float
    d_a_bc: float
    delta_m: float
    unmeasured_ii: float
    interrogated_ii: float
    monogamous: bool
    theorem1_consistent: bool

    def to_dict(self) -> dict:
        return asdict(self)

    CSV_FIELDS = (
        "node", "d_ab", "d_ac", "d_a_bc", "delta_m",
        "unmeasured_ii", "interrogated_ii", "monogamous", "theorem1_consistent",
    )

    def csv_row(self) -> list:
        return [getattr(self, f) for f in self.CSV_FIELDS]


@dataclass(frozen=True)
class Theorem1Check:
    delta_m: float
    interaction_gap: float
    consistent: bool
    dead_band: float = DEAD_BAND


def unmeasured_interaction_info(rho: DensityMatrix) -> float:
    """S_AB + S_BC + S_AC - (S_A + S_B + S_C) - S_ABC, in bits.

    Zero for every pure three-party state; invariant under local unitaries;
    symmetric under party permutations.
    """
    _require_three_parties(rho)
    pair_sum = sum(
        vn_entropy(partial_trace(rho, keep)) for keep in ((0, 1), (1, 2), (0, 2))
    )
    single_sum = sum(vn_entropy(partial_trace(rho, (i,))) for i in range(3))
    return pair_sum - single_sum - vn_entropy(rho)


def _three_minima(rho: DensityMatrix, node: int, cfg: OptimizerConfig):
    """Minimized measured conditional entropies S(n|x)_min, S(n|y)_min,
    S(n|xy)_min for the two partners x < y of `node`, each term optimized
    independently on the corresponding reduction."""
    partners = [i for i in range(3) if i != node]
    x, y = partners
    results = {}
    for label, me in (("x", (x,)), ("y", (y,)), ("xy", (x, y))):
        reduced, _, me_r = _reduce_for(rho, (node,), me)
        results[label] = min_conditional_entropy(reduced, me_r, cfg)
    return x, y, results


def interrogated_interaction_info(
    rho: DensityMatrix, node="A", cfg: OptimizerConfig | None = None
) -> float:
    """Node-anchored interrogated interaction information:
    S(n|x)_min + S(n|y)_min - S(n|xy)_min - S(rho_n), each measured
    conditional entropy minimized independently over its own basis."""
    _require_three_parties(rho)
    cfg = cfg or OptimizerConfig()
    n = node_index(node)
    _, _, minima = _three_minima(rho, n, cfg)
    s_node = vn_entropy(partial_trace(rho, (n,)))
    return minima["x"].value + minima["y"].value - minima["xy"].value - s_node


def cyclic_interaction_identity_gap(
    rho: DensityMatrix, cfg: OptimizerConfig | None = None
) -> tuple[float, float]:
    """Both sides of the unilocal-measurement identity
    I(rho_ABC) - I~(rho_ABC) = D(AB) + D(BC) + D(CA).

    The left side combines the cyclic interrogated and unmeasured interaction
    informations; the right side sums the three one-qubit-measured discords.
    Both sides are nonnegative up to optimizer slack, and they vanish iff all
    three bipartite discords vanish.
    """
    _require_three_parties(rho)
    cfg = cfg or OptimizerConfig()
    s_abc = vn_entropy(rho)
    # cyclic pairs (rest, measured): A|B, B|C, C|A
    pairs = (((0,), (1,)), ((1,), (2,)), ((2,), (0,)))
    interrogated = -s_abc
    unmeasured = -s_abc
    for rest, me in pairs:
        reduced, rest_r, me_r = _reduce_for(rho, rest, me)
        interrogated += min_conditional_entropy(reduced, me_r, cfg).value
        unmeasured += unmeasured_conditional_entropy(reduced, rest_r, me_r)
    lhs = interrogated - unmeasured
    rhs = sum(discord(rho, rest, me, cfg).value for rest, me in pairs)
    return lhs, rhs


def _theorem1_consistent(delta_m: float, gap: float, dead_band: float = DEAD_BAND) -> bool:
    if abs(delta_m) <= dead_band or abs(gap) <= dead_band:
        return True
    return (delta_m > 0) == (gap > 0)


def monogamy_deficit(
    rho: DensityMatrix, node="A", cfg: OptimizerConfig | None = None
) -> MonogamyReport:
    """Full monogamy report for one node: the two bipartite discords, the
    one-vs-rest discord, delta_m, and both interaction informations.

    The three basis minimizations are run once and shared between the discord
    values and the interrogated interaction information (they are the same
    term-wise minima, which is what makes the theorem-consistency equality
    exact up to round-off).
    """
    _require_three_parties(rho)
    cfg = cfg or OptimizerConfig()
    n = node_index(node)
    x, y, minima = _three_minima(rho, n, cfg)

    def s_tilde(me):
        reduced, node_r, me_r = _reduce_for(rho, (n,), me)
        return unmeasured_conditional_entropy(reduced, node_r, me_r)

    d_ab = minima["x"].value - s_tilde((x,))
    d_ac = minima["y"].value - s_tilde((y,))
    d_a_bc = minima["xy"].value - s_tilde((x, y))
    delta_m = d_ab + d_ac - d_a_bc

    s_node = vn_entropy(partial_trace(rho, (n,)))
    interrogated = minima["x"].value + minima["y"].value - minima["xy"].value - s_node
    unmeasured = unmeasured_interaction_info(rho)

    node_name = "ABC"[n]
    return MonogamyReport(
        node=node_name,
        d_ab=float(d_ab),
        d_ac=float(d_ac),
        d_a_bc=float(d_a_bc),
        delta_m=float(delta_m),
        unmeasured_ii=float(unmeasured),
        interrogated_ii=float(interrogated),
        monogamous=bool(delta_m <= MONOGAMY_TOL),
        theorem1_consistent=bool(_theorem1_consistent(delta_m, interrogated - unmeasured)),
    )


def theorem1_check(
    rho: DensityMatrix, node="A", cfg: OptimizerConfig | None = None
) -> Theorem1Check:
    """Sign agreement between delta_m and (interrogated - unmeasured)
    interaction information, with a dead-band around zero where agreement
    is not asserted."""
    report = monogamy_deficit(rho, node, cfg)
    gap = report.interrogated_ii - report.unmeasured_ii
    return Theorem1Check(
        delta_m=report.delta_m,
        interaction_gap=float(gap),
        consistent=bool(_theorem1_consistent(report.delta_m, gap)),
    )
