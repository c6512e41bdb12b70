"""Which Specht modules are irreducible, and which signed Young modules they are.

Irreducibility is decided by the cheapest sound route available: Gram
determinants for p-regular (or, after conjugating, p-restricted)
partitions, the quotient criterion inside Rouquier blocks, and otherwise
the MeatAxe within a dimension budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial, prod

from .abacus import BlockId, block_members, block_of, is_rouquier, p_quotient, rouquier_decompose
from .errors import DomainError, InconclusiveError, NotDecomposableError, PreconditionError
from .gfalg import det_mod_p
from .lr import FiltrationMultiset, pipeline_filtration
from .meataxe import is_summand_irred, meataxe
from .partitions import (
    Partition,
    add_scaled,
    all_partitions,
    as_partition,
    check_prime,
    conjugate,
    count_standard_tableaux,
    is_p_regular,
    is_p_restricted,
    p_adic_split,
    restricted_mullineux,
)
from .specht import SignedPermRep, gram_matrix, specht_module

METHODS = ("gram-regular", "gram-restricted-conjugate", "rouquier-criterion", "meataxe")


@dataclass(frozen=True)
class IrredVerdict:
    partition: Partition
    p: int
    irreducible: bool
    method: str
    seed: int | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def to_json(self) -> dict:
        out = {"partition": str(self.partition), "p": self.p, "irreducible": self.irreducible, "method": self.method}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@dataclass(frozen=True)
class SignedYoungLabel:
    """``Y(lambda_part | p*mu_part)``; ``known`` is False in the open mixed case."""

    lambda_part: Partition | None
    mu_part: Partition | None
    known: bool

    def shape(self, p: int) -> tuple[Partition, Partition]:
        return self.lambda_part, scale(self.mu_part, p)


@dataclass
class VerificationReport:
    partition: Partition
    p: int
    verdict: IrredVerdict
    label: SignedYoungLabel
    status: str
    seed: int
    filtration: FiltrationMultiset | None = None
    certificate: tuple[Partition, Partition] | None = None
    summand_checks: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        cert = None
        if self.certificate is not None:
            cert = {"alpha": str(self.certificate[0]), "p_beta": str(self.certificate[1])}
        return {
            "partition": str(self.partition),
            "p": self.p,
            "irreducible": self.verdict.irreducible,
            "method": self.verdict.method,
            "filtration": self.filtration.to_json() if self.filtration is not None else None,
            "certificate": cert,
            "label_known": self.label.known,
            "summand_checks": [
                {"alpha": str(a), "p_beta": str(b), "summand": ok} for (a, b), ok in self.summand_checks
            ],
            "status": self.status,
            "seed": self.seed,
        }


def scale(mu, p: int) -> Partition:
    return Partition(p * x for x in as_partition(mu))


def signed_perm_dim(alpha, beta) -> int:
    alpha, beta = as_partition(alpha), as_partition(beta)
    d = alpha.size + beta.size
    return factorial(d) // prod(factorial(x) for x in (*alpha, *beta))


# --- irreducibility --------------------------------------------------------


def gram_irreducible(lam, p: int) -> bool:
    """Leaf test for p-regular ``lam``: the Gram matrix is nonsingular mod p."""
    lam = as_partition(lam)
    if not is_p_regular(lam, p):
        raise PreconditionError(f"the Gram test only applies to {p}-regular shapes, got {lam}")
    if not lam:
        return True
    return det_mod_p(gram_matrix(lam, p), p) != 0


def _leaf(lam, p: int) -> bool:
    lam = as_partition(lam)
    if is_p_regular(lam, p):
        return gram_irreducible(lam, p)
    if is_p_restricted(lam, p):
        return gram_irreducible(conjugate(lam), p)
    raise PreconditionError(f"{lam} is neither {p}-regular nor {p}-restricted")


def in_rouquier_block(lam, p: int) -> bool:
    return p >= 3 and is_rouquier(block_of(lam, p))


def rouquier_criterion(lam, p: int) -> bool:
    """Irreducibility inside a Rouquier block, read off the p-quotient."""
    lam = as_partition(lam)
    if not in_rouquier_block(lam, p):
        raise PreconditionError(f"{lam} is not in a Rouquier block for p={p}")
    q = p_quotient(lam, p)
    if any(q[1 : p - 1]):
        return False
    first, last = q[0], q[p - 1]
    if not (is_p_restricted(first, p) and is_p_regular(last, p)):
        return False
    return _leaf(first, p) and _leaf(last, p)


def irreducible_specht(lam, p: int, budget: int = 1500, seed: int = 0, method: str | None = None) -> IrredVerdict:
    """Decide whether ``S^lam`` is irreducible over GF(p).

    Routes in order: p-regular, p-restricted, Rouquier block, MeatAxe. Pass
    ``method`` to force one route.
    """
    check_prime(p, 3)
    lam = as_partition(lam)
    route = method
    if route is None:
        if is_p_regular(lam, p):
            route = "gram-regular"
        elif is_p_restricted(lam, p):
            route = "gram-restricted-conjugate"
        elif in_rouquier_block(lam, p):
            route = "rouquier-criterion"
        else:
            route = "meataxe"
    if route == "gram-regular":
        return IrredVerdict(lam, p, gram_irreducible(lam, p), route)
    if route == "gram-restricted-conjugate":
        if not is_p_restricted(lam, p):
            raise PreconditionError(f"{lam} is not {p}-restricted")
        return IrredVerdict(lam, p, gram_irreducible(conjugate(lam), p), route)
    if route == "rouquier-criterion":
        return IrredVerdict(lam, p, rouquier_criterion(lam, p), route)
    if route == "meataxe":
        dim = count_standard_tableaux(lam)
        if dim > budget:
            raise InconclusiveError(f"dim S^{lam} = {dim} exceeds the budget {budget} and no combinatorial test applies")
        return IrredVerdict(lam, p, meataxe(specht_module(lam, p), seed).irreducible, route, seed)
    raise ValueError(f"unknown method {method!r}")


def classify_rouquier_block(block: BlockId) -> list[Partition]:
    """Members of a Rouquier block whose Specht modules are irreducible."""
    p, w = block.p, block.weight
    check_prime(p, 3)
    if not is_rouquier(block):
        raise PreconditionError(f"core {block.core} is not Rouquier at weight {w} for p={p}")
    out = set()
    for a in range(w + 1):
        for mu in all_partitions(a):
            if not (is_p_regular(mu, p) and gram_irreducible(mu, p)):
                continue
            sigma = add_scaled(block.core, mu, p)
            for tau in all_partitions(w - a):
                if not (is_p_regular(tau, p) and gram_irreducible(tau, p)):
                    continue
                out.add(conjugate(add_scaled(conjugate(sigma), tau, p)))
    return sorted(out, reverse=True)


def block_verdicts(block: BlockId) -> list[IrredVerdict]:
    """Rouquier-criterion verdict for every member of the block."""
    if not is_rouquier(block):
        raise PreconditionError(f"core {block.core} is not Rouquier at weight {block.weight} for p={block.p}")
    return [IrredVerdict(lam, block.p, rouquier_criterion(lam, block.p), "rouquier-criterion") for lam in block_members(block)]


# --- labels and the main theorem --------------------------------------------


def signed_young_label(lam, p: int, verdict: IrredVerdict | None = None) -> SignedYoungLabel:
    lam = as_partition(lam)
    check_prime(p, 3)
    if verdict is None:
        verdict = irreducible_specht(lam, p)
    if not verdict.irreducible:
        raise DomainError(f"S^{lam} is reducible over GF({p})")
    if is_p_regular(lam, p):
        return SignedYoungLabel(lam, Partition(), True)
    if is_p_restricted(lam, p):
        tau, mu = p_adic_split(conjugate(lam), p)
        return SignedYoungLabel(restricted_mullineux(tau, p), mu, True)
    return SignedYoungLabel(None, None, False)


def candidate_shapes(d: int, p: int) -> list[tuple[Partition, Partition]]:
    """Every ``(alpha, p*beta)`` with ``|alpha| + p|beta| = d``, smallest module first."""
    out = []
    for b in range(d // p + 1):
        for beta in all_partitions(b):
            for alpha in all_partitions(d - p * b):
                out.append((alpha, scale(beta, p)))
    out.sort(key=lambda ab: (signed_perm_dim(*ab), str(ab[1]), str(ab[0])))
    return out


def verify_main_theorem(lam, p: int, budget: int = 1500, seed: int = 0) -> VerificationReport:
    """Find a signed permutation module having ``S^lam`` as a direct summand.

    Status is ``verified`` with a certificate, ``inconclusive`` when the
    budget hid some candidates, or ``refuted`` when every candidate failed.
    """
    start = time.perf_counter()
    lam = as_partition(lam)
    check_prime(p, 3)
    verdict = irreducible_specht(lam, p, budget, seed)
    if not verdict.irreducible:
        raise DomainError(f"S^{lam} is reducible over GF({p}) ({verdict.method})")
    label = signed_young_label(lam, p, verdict)
    filtration = None
    if in_rouquier_block(lam, p):
        try:
            filtration = pipeline_filtration(rouquier_decompose(lam, p))
        except NotDecomposableError:
            filtration = None
    report = VerificationReport(lam, p, verdict, label, "inconclusive", seed, filtration)
    if count_standard_tableaux(lam) > budget:
        report.elapsed = time.perf_counter() - start
        return report
    s = specht_module(lam, p)
    shapes = candidate_shapes(lam.size, p)
    if label.known:
        known = label.shape(p)
        shapes.remove(known)
        shapes.insert(0, known)
    skipped = False
    for alpha, beta in shapes:
        if signed_perm_dim(alpha, beta) > budget:
            skipped = True
            continue
        ok = is_summand_irred(s, SignedPermRep(alpha, beta, p))
        report.summand_checks.append(((alpha, beta), ok))
        if ok:
            report.certificate = (alpha, beta)
            report.status = "verified"
            break
    else:
        report.status = "inconclusive" if skipped else "refuted"
    report.elapsed = time.perf_counter() - start
    return report
